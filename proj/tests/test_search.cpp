#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "acgroups/json_io.hpp"
#include "acgroups/search.hpp"
#include "helpers.hpp"
#include "search_testutil.hpp"

using namespace acgroups;

namespace {

const Alphabet& kF2 = searchAlphabet();

Word w(const char* text) { return parseWord(text, kF2); }

// a random member of the same canonical class: conjugations, inversions, swap
WordPair classNoise(std::mt19937_64& rng, const WordPair& p) {
    WordPair r = p;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(r.first, r.second);
    for (Word* comp : {&r.first, &r.second}) {
        if (std::uniform_int_distribution<int>(0, 1)(rng)) *comp = comp->inverse();
        Word c = testgen::randomReducedWord(rng, kF2,
                                            std::uniform_int_distribution<std::size_t>(0, 3)(rng));
        *comp = conjugate(*comp, c);
    }
    return r;
}

WordPair randomScramble(std::mt19937_64& rng, int steps, std::size_t cap) {
    return classNoise(rng, testgen::reversibleScramble(rng, steps, cap));
}

}  // namespace

TEST_CASE("cyclic reduction and rotations") {
    Word prefix;
    // x1 x2 x1 x2^-1 x1^-1 = (x1 x2) x1 (x1 x2)^-1 as a conjugate
    Word core = cyclicReduce(w("x1 x2 x1 x2^-1 x1^-1"), &prefix);
    CHECK(core == w("x1"));
    CHECK(prefix == w("x1 x2"));
    CHECK(prefix * core * prefix.inverse() == w("x1 x2 x1 x2^-1 x1^-1"));

    Word prefix2;
    CHECK(cyclicReduce(w("x2 x1 x2^-1"), &prefix2) == w("x1"));
    CHECK(prefix2 == w("x2"));
    CHECK(cyclicReduce(w("x1 x2")) == w("x1 x2"));

    CHECK(cyclicReduce(w("1")).empty());
    CHECK(rotateWord(w("x1 x2 x1"), 1) == w("x2 x1 x1"));
    CHECK(rotateWord(w("x1 x2"), 2) == w("x1 x2"));
}

TEST_CASE("canonical words") {
    CHECK(canonicalWord(w("x2 x1 x2^-1")) == w("x1"));
    CHECK(canonicalWord(w("x1^-1")) == w("x1"));
    CHECK(canonicalWord(w("x2 x1")) == w("x1 x2"));
    CHECK(canonicalWord(w("x2^-1 x1^-1")) == w("x1 x2"));
    CHECK(canonicalWord(Word::identity(kF2)).empty());
}

TEST_CASE("canonical states match the closure examples") {
    // (y x y^-1, y) ~ (x, y); (x^-1, y) ~ (x, y); (y, x) ~ (x, y)
    PairState goal = goalState();
    CHECK(PairState(w("x2 x1 x2^-1"), w("x2")) == goal);
    CHECK(PairState(w("x1^-1"), w("x2")) == goal);
    CHECK(PairState(w("x2"), w("x1")) == goal);
    CHECK(goal.first == w("x1"));
    CHECK(goal.second == w("x2"));
}

TEST_CASE("canonicalization is idempotent and class-invariant") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 1000; ++trial) {
        WordPair p{testgen::randomReducedWord(rng, kF2, trial % 8),
                   testgen::randomReducedWord(rng, kF2, (trial * 3) % 8)};
        PairState st = canonicalize(p);
        CHECK(PairState(st.first, st.second) == st);
        CHECK(canonicalize(classNoise(rng, p)) == st);
    }
}

TEST_CASE("neighbors") {
    PairState goal = goalState();
    auto near = neighbors(goal, 16);
    CHECK(std::find(near.begin(), near.end(), PairState(w("x1 x2"), w("x2"))) != near.end());
    // every pair one move from (x, y) has total length 3
    CHECK(neighbors(goal, 2).empty());
    // the state itself is not reported as its own neighbor
    for (const PairState& st : near) CHECK(st != goal);
}

TEST_CASE("neighbor relation is symmetric at a fixed cap") {
    std::mt19937_64 rng(71);
    int edges = 0;
    for (int trial = 0; trial < 40; ++trial) {
        PairState st = canonicalize({testgen::randomReducedWord(rng, kF2, 1 + trial % 5),
                                     testgen::randomReducedWord(rng, kF2, 1 + (trial * 7) % 5)});
        for (const PairState& st2 : neighbors(st, 12)) {
            auto back = neighbors(st2, 12);
            CHECK(std::find(back.begin(), back.end(), st) != back.end());
            ++edges;
        }
    }
    CHECK(edges > 100);
}

TEST_CASE("bfs on trivial instances") {
    SearchBudget budget;
    budget.maxTotalLength = 8;
    budget.maxNodes = 10000;

    SearchResult already = bfsTrivialize({w("x1"), w("x2")}, budget);
    CHECK(already.status == SearchStatus::Found);
    CHECK(already.depth == 0);
    CHECK(already.path.moves.empty());

    SearchResult oneMove = bfsTrivialize({w("x1 x2"), w("x2")}, budget);
    CHECK(oneMove.status == SearchStatus::Found);
    CHECK(oneMove.depth == 1);
    // the path replays to the goal class on the original pair
    GroupTuple start(kF2, {w("x1 x2"), w("x2")});
    GroupTuple landed = applyTransform(oneMove.path, start);
    CHECK(PairState(landed.at(1), landed.at(2)) == goalState());
}

TEST_CASE("budget statuses") {
    SearchBudget tiny;
    tiny.maxTotalLength = 16;
    tiny.maxNodes = 5;
    SearchResult r = bfsTrivialize(akPair(3), tiny);
    CHECK(r.status == SearchStatus::BudgetHit);

    // a tight length cap makes a small component exhaust
    SearchBudget tightCap;
    tightCap.maxTotalLength = 4;
    tightCap.maxNodes = 100000;
    SearchResult ex = bfsTrivialize({w("x1 x1"), w("x1 x1")}, tightCap);
    CHECK(ex.status == SearchStatus::Exhausted);  // determinant 0, never reaches the basis
}

TEST_CASE("scramble round-trips") {
    std::mt19937_64 rng(81);
    SearchBudget budget;
    budget.maxTotalLength = 14;
    budget.maxNodes = 2000000;
    for (int trial = 0; trial < 12; ++trial) {
        int steps = 1 + trial % 8;
        WordPair start = randomScramble(rng, steps, 14);
        SearchResult r = bfsTrivialize(start, budget);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.depth <= steps);
        GroupTuple tuple(kF2, {start.first, start.second});
        GroupTuple landed = applyTransform(r.path, tuple);
        CHECK(PairState(landed.at(1), landed.at(2)) == goalState());
    }
}

TEST_CASE("budget growth never loses a found result") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 6; ++trial) {
        WordPair start = randomScramble(rng, 1 + trial % 5, 12);
        SearchBudget base;
        base.maxTotalLength = 12;
        base.maxNodes = 2000000;
        SearchResult r1 = bfsTrivialize(start, base);
        REQUIRE(r1.status == SearchStatus::Found);

        SearchBudget moreNodes = base;
        moreNodes.maxNodes *= 4;
        CHECK(bfsTrivialize(start, moreNodes).status == SearchStatus::Found);

        SearchBudget longerWords = base;
        longerWords.maxTotalLength += 2;
        CHECK(bfsTrivialize(start, longerWords).status == SearchStatus::Found);
    }
}

TEST_CASE("akPair") {
    WordPair p3 = akPair(3);
    CHECK(p3.first == w("x1^3 x2^-4"));
    CHECK(p3.second == w("x1 x2 x1 x2^-1 x1^-1 x2^-1"));
    CHECK(p3.first.length() + p3.second.length() == 13);

    WordPair p2 = akPair(2);
    CHECK(p2.first == w("x1^2 x2^-3"));
    CHECK(p2.second == p3.second);

    CHECK_THROWS_AS(akPair(1), std::invalid_argument);
}

TEST_CASE("abelianized determinant filter") {
    CHECK(abelianDeterminant(w("x1"), w("x2")) == 1);
    CHECK(abelianDeterminant(w("x1 x1"), w("x2")) == 2);
    // (3)(-1) - (-4)(1) = 1
    CHECK(abelianDeterminant(akPair(3).first, akPair(3).second) == 1);
}

TEST_CASE("classifySmall at tiny caps") {
    SearchBudget budget;
    budget.maxTotalLength = 10;
    budget.maxNodes = 200000;

    ClassifyReport r2 = classifySmall(2, budget);
    CHECK(r2.attempted.size() == 1);  // only the class of (x, y) passes the filter
    CHECK(r2.trivialized == 1);
    CHECK(r2.unresolved == 0);
    CHECK(r2.attempted[0].state == goalState());

    ClassifyReport r3 = classifySmall(3, budget);
    CHECK(r3.determinantExcluded > 0);
    for (const ClassifyItem& item : r3.attempted) {
        CHECK(item.status == SearchStatus::Found);
        // (x^2, y) and friends were filtered out
        CHECK((item.det == 1 || item.det == -1));
    }
}

TEST_CASE("classifySmall output is deterministic") {
    SearchBudget budget;
    budget.maxTotalLength = 10;
    budget.maxNodes = 100000;
    Json a = classifyReportToJson(classifySmall(4, budget));
    Json b = classifyReportToJson(classifySmall(4, budget));
    // elapsed times are not part of the report, so dumps must match exactly
    CHECK(a.dump() == b.dump());
}

TEST_CASE("corpus files parse and write") {
    std::istringstream in(
        "# Akbulut-Kirby series\n"
        "\n"
        "ak2: x1^2 x2^-3 ; x1 x2 x1 x2^-1 x1^-1 x2^-1\n"
        "ak3: x1^3 x2^-4 ; x1 x2 x1 x2^-1 x1^-1 x2^-1\n");
    auto entries = parseCorpus(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "ak2");
    CHECK(entries[0].pair == akPair(2));
    CHECK(entries[1].pair == akPair(3));

    std::ostringstream out;
    writeCorpus(out, entries);
    std::istringstream round(out.str());
    auto again = parseCorpus(round);
    CHECK(again.size() == 2);
    CHECK(again[1].pair == entries[1].pair);

    std::istringstream bad("ak2 x1 ; x2\n");
    CHECK_THROWS_AS(parseCorpus(bad), ParseError);
}

TEST_CASE("search result json") {
    SearchBudget budget;
    budget.maxTotalLength = 8;
    budget.maxNodes = 1000;
    SearchResult r = bfsTrivialize({w("x1 x2"), w("x2")}, budget);
    Json j = searchResultToJson(r);
    CHECK(j.at("status") == "found");
    CHECK(j.at("depth") == 1);
    // the path string parses back through the move grammar
    ACTransform parsed = parseTransform(j.at("path").get<std::string>(), kF2);
    CHECK(parsed == r.path);
}
