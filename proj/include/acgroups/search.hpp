#pragma once

// Bounded breadth-first search for AC-trivialization of balanced pairs over
// F_2 (alphabet (2, 0)).
//
// States are canonical classes: each component cyclically reduced and
// shortlex-minimal among all rotations of itself and of its inverse, the two
// components sorted. Rotation, inversion and swap are all realizable by
// AC-moves, so a class is contained in a single AC-equivalence class.
//
// One search edge replaces a component by (rotation of it or its inverse) *
// (rotation of the other or its inverse). Every such edge is a bounded
// composite of conjugation, inversion and multiplication moves, and the edge
// relation is symmetric and independent of the chosen representatives; found
// paths are expanded back into explicit elementary move sequences.

#include <algorithm>
#include <chrono>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acgroups/moves.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

inline const Alphabet& searchAlphabet() {
    static const Alphabet alphabet{2, 0};
    return alphabet;
}

using WordPair = std::pair<Word, Word>;

// w = prefix * core * prefix^-1 with core cyclically reduced
inline Word cyclicReduce(const Word& w, Word* conjPrefix = nullptr) {
    const auto& letters = w.letters();
    std::size_t lo = 0;
    std::size_t hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    if (conjPrefix) {
        std::vector<Letter> prefix(letters.begin(), letters.begin() + static_cast<long>(lo));
        *conjPrefix = Word::fromLetters(w.alphabet(), prefix);
    }
    std::vector<Letter> core(letters.begin() + static_cast<long>(lo),
                             letters.begin() + static_cast<long>(hi));
    return Word::fromLetters(w.alphabet(), core);
}

// rotation of a cyclically reduced word: first k letters move to the end
inline Word rotateWord(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.length();
    if (k == 0) return w;
    const auto& letters = w.letters();
    std::vector<Letter> rotated(letters.begin() + static_cast<long>(k), letters.end());
    rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<long>(k));
    return Word::fromLetters(w.alphabet(), rotated);
}

// shortlex-least rotation of the cyclic reduction (no inversion closure)
inline Word cyclicMin(const Word& w) {
    Word core = cyclicReduce(w);
    Word best = core;
    for (std::size_t k = 1; k < core.length(); ++k) {
        Word candidate = rotateWord(core, k);
        if (shortlexLess(candidate, best)) best = candidate;
    }
    return best;
}

// canonical class representative: least among rotations of the cyclic
// reduction and rotations of its inverse
inline Word canonicalWord(const Word& w) {
    Word a = cyclicMin(w);
    Word b = cyclicMin(w.inverse());
    return shortlexLess(b, a) ? b : a;
}

struct PairState {
    Word first;   // canonical, first <= second in shortlex
    Word second;

    PairState() = default;
    PairState(const Word& u, const Word& v) {
        Word cu = canonicalWord(u);
        Word cv = canonicalWord(v);
        if (shortlexLess(cv, cu)) std::swap(cu, cv);
        first = cu;
        second = cv;
    }

    std::size_t totalLength() const { return first.length() + second.length(); }

    const Word& component(int slot) const { return slot == 0 ? first : second; }

    friend bool operator==(const PairState& a, const PairState& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const PairState& a, const PairState& b) { return !(a == b); }
    friend bool operator<(const PairState& a, const PairState& b) {
        if (a.first != b.first) return shortlexLess(a.first, b.first);
        return shortlexLess(a.second, b.second);
    }
};

struct PairStateHash {
    std::size_t operator()(const PairState& st) const {
        return st.first.hashValue() * 1000003u ^ st.second.hashValue();
    }
};

inline PairState canonicalize(const WordPair& p) { return PairState(p.first, p.second); }

inline PairState goalState() {
    return PairState(Word::generator(searchAlphabet(), xGen(1)),
                     Word::generator(searchAlphabet(), xGen(2)));
}

// One edge of the canonical-state graph: replace a component by
// (rotation of it) * (rotation of the other component or of its inverse).
// Base inversion is not enumerated: the result class is inversion-closed, so
// the inverted-base product already appears as a rotated product with the
// multiplier sign flipped.
struct MoveEdge {
    int slot = 0;       // component replaced (index into the sorted state)
    int baseRot = 0;    // rotation applied to the base before multiplying
    int multSign = 1;   // multiplier = other component or its inverse
    int multRot = 0;    // rotation applied to the multiplier
};

inline std::vector<std::pair<PairState, MoveEdge>> neighborsWithEdges(const PairState& st,
                                                                      std::size_t maxTotalLength) {
    std::vector<std::pair<PairState, MoveEdge>> out;
    std::unordered_map<PairState, bool, PairStateHash> seen;
    for (int slot = 0; slot < 2; ++slot) {
        const Word& base = st.component(slot);
        const Word& other = st.component(1 - slot);
        if (other.empty()) continue;  // multiplying by the identity is a self-loop
        std::size_t baseRots = base.empty() ? 1 : base.length();
        for (std::size_t br = 0; br < baseRots; ++br) {
            Word rotatedBase = rotateWord(base, br);
            for (int multSign : {1, -1}) {
                Word multWord = multSign > 0 ? other : other.inverse();
                for (std::size_t mr = 0; mr < other.length(); ++mr) {
                    Word product = rotatedBase * rotateWord(multWord, mr);
                    PairState next(product, other);
                    if (next.totalLength() > maxTotalLength || next == st) continue;
                    if (seen.emplace(next, true).second)
                        out.emplace_back(next, MoveEdge{slot, static_cast<int>(br), multSign,
                                                        static_cast<int>(mr)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Is there a raw edge from -> to? The two states must share the untouched
// component; the check enumerates only the products for the moved slot.
inline bool rawEdgeExists(const PairState& from, const PairState& to,
                          std::size_t maxTotalLength) {
    if (from == to || to.totalLength() > maxTotalLength) return false;
    for (int slot = 0; slot < 2; ++slot) {
        const Word& base = from.component(slot);
        const Word& other = from.component(1 - slot);
        if (other.empty()) continue;
        for (int targetSlot = 0; targetSlot < 2; ++targetSlot) {
            if (to.component(targetSlot) != other) continue;
            const Word& wanted = to.component(1 - targetSlot);
            std::size_t baseRots = base.empty() ? 1 : base.length();
            for (std::size_t br = 0; br < baseRots; ++br) {
                Word rotatedBase = rotateWord(base, br);
                for (int multSign : {1, -1}) {
                    Word multWord = multSign > 0 ? other : other.inverse();
                    for (std::size_t mr = 0; mr < other.length(); ++mr) {
                        Word product = rotatedBase * rotateWord(multWord, mr);
                        if (canonicalWord(product) == wanted) return true;
                    }
                }
            }
        }
    }
    return false;
}

// The public neighbor set keeps an edge only when a raw edge exists in both
// directions, so the relation is symmetric at any fixed cap. (Raw edges that
// cyclically swallow part of the base can be one-way; the search may still
// traverse them, they just are not reported here.)
inline std::vector<PairState> neighbors(const PairState& st, std::size_t maxTotalLength) {
    std::vector<PairState> out;
    for (auto& [state, edge] : neighborsWithEdges(st, maxTotalLength))
        if (rawEdgeExists(state, st, maxTotalLength)) out.push_back(state);
    return out;
}

struct SearchBudget {
    int maxTotalLength = 16;
    long long maxNodes = 1000000;
    std::optional<int> maxDepth;
};

struct SearchStats {
    long long nodesExpanded = 0;
    std::size_t frontierPeak = 0;
    double elapsedSeconds = 0.0;
};

enum class SearchStatus { Found, Exhausted, BudgetHit };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    ACTransform path{searchAlphabet()};  // meaningful only when status == Found
    int depth = 0;                       // number of canonical-graph edges
    SearchStats stats;
};

// ---- path replay -----------------------------------------------------------

// find c with target = c w c^-1; both words reduced and conjugate
inline Word solveConjugator(const Word& w, const Word& target) {
    Word wPrefix, tPrefix;
    Word wCore = cyclicReduce(w, &wPrefix);
    Word tCore = cyclicReduce(target, &tPrefix);
    if (wCore.length() != tCore.length())
        throw std::invalid_argument("solveConjugator: words are not conjugate");
    std::size_t rotations = wCore.empty() ? 1 : wCore.length();
    for (std::size_t k = 0; k < rotations; ++k) {
        if (rotateWord(wCore, k) == tCore) {
            std::vector<Letter> rho(wCore.letters().begin(),
                                    wCore.letters().begin() + static_cast<long>(k));
            Word rhoWord = Word::fromLetters(w.alphabet(), rho);
            Word c = tPrefix * rhoWord.inverse() * wPrefix.inverse();
            if (conjugate(w, c) != target)
                throw std::logic_error("solveConjugator: verification failed");
            return c;
        }
    }
    throw std::invalid_argument("solveConjugator: words are not conjugate");
}

namespace detail {

// moves sending actual component s of the pair to the exact word `target`
// (a conjugate of the component or of its inverse)
inline void emitAlignment(ACTransform& path, std::vector<Word>& pair, int s, const Word& target) {
    Word current = pair[static_cast<std::size_t>(s)];
    if (cyclicMin(current) != cyclicMin(target)) {
        path.push(ElementaryMove{ElementaryMove::Kind::AC3, s + 1, 0, 0, Word(), false});
        current = current.inverse();
    }
    Word c = solveConjugator(current, target);
    const auto& letters = c.letters();
    for (std::size_t idx = letters.size(); idx-- > 0;) {
        Word g = Word::generator(current.alphabet(), letters[idx].gen, letters[idx].sign);
        path.push(ElementaryMove{ElementaryMove::Kind::ConjFree, s + 1, 0, 0, g, false});
    }
    pair[static_cast<std::size_t>(s)] = target;
}

}  // namespace detail

// Expand a chain of canonical-graph edges into elementary moves acting on the
// original (non-canonical) start pair.
inline ACTransform buildReplayPath(const WordPair& start,
                                   const std::vector<std::pair<PairState, MoveEdge>>& chain) {
    ACTransform path(searchAlphabet());
    std::vector<Word> pair{start.first, start.second};
    for (const auto& [state, edge] : chain) {
        // match actual slots to the sorted representative's slots
        int s = -1;
        for (int cand = 0; cand < 2; ++cand) {
            if (canonicalWord(pair[static_cast<std::size_t>(cand)]) == state.component(edge.slot) &&
                canonicalWord(pair[static_cast<std::size_t>(1 - cand)]) ==
                    state.component(1 - edge.slot)) {
                s = cand;
                break;
            }
        }
        if (s < 0) throw std::logic_error("buildReplayPath: pair left its canonical class");
        int sOther = 1 - s;

        const Word& repBase = state.component(edge.slot);
        const Word& repOther = state.component(1 - edge.slot);
        Word baseTarget = rotateWord(repBase, static_cast<std::size_t>(edge.baseRot));
        Word multTarget = rotateWord(edge.multSign > 0 ? repOther : repOther.inverse(),
                                     static_cast<std::size_t>(edge.multRot));

        detail::emitAlignment(path, pair, s, baseTarget);
        detail::emitAlignment(path, pair, sOther, multTarget);
        path.push(ElementaryMove{ElementaryMove::Kind::AC1, s + 1, sOther + 1, 0, Word(), false});
        pair[static_cast<std::size_t>(s)] =
            pair[static_cast<std::size_t>(s)] * pair[static_cast<std::size_t>(sOther)];
    }
    return path;
}

inline SearchResult bfsTrivialize(const WordPair& start, const SearchBudget& budget) {
    auto t0 = std::chrono::steady_clock::now();
    SearchResult result;
    PairState goal = goalState();

    struct Rec {
        PairState state;
        int parent;
        MoveEdge edge;
        int depth;
    };
    std::vector<Rec> records;
    std::unordered_map<PairState, int, PairStateHash> index;

    PairState seed = canonicalize(start);
    records.push_back(Rec{seed, -1, MoveEdge{}, 0});
    index.emplace(seed, 0);

    int goalIndex = seed == goal ? 0 : -1;
    std::size_t head = 0;
    while (goalIndex < 0 && head < records.size()) {
        if (result.stats.nodesExpanded >= budget.maxNodes) {
            result.status = SearchStatus::BudgetHit;
            break;
        }
        Rec current = records[head];  // copy: records may reallocate below
        ++head;
        ++result.stats.nodesExpanded;
        if (budget.maxDepth && current.depth >= *budget.maxDepth) continue;
        auto edges = neighborsWithEdges(current.state,
                                        static_cast<std::size_t>(budget.maxTotalLength));
        int parentIndex = static_cast<int>(head) - 1;
        for (const auto& [next, edge] : edges) {
            if (index.count(next)) continue;
            index.emplace(next, static_cast<int>(records.size()));
            records.push_back(Rec{next, parentIndex, edge, current.depth + 1});
            if (next == goal) {
                goalIndex = static_cast<int>(records.size()) - 1;
                break;
            }
        }
        result.stats.frontierPeak = std::max(result.stats.frontierPeak, records.size() - head);
    }

    if (goalIndex >= 0) {
        result.status = SearchStatus::Found;
        std::vector<std::pair<PairState, MoveEdge>> chain;
        for (int at = goalIndex; records[static_cast<std::size_t>(at)].parent >= 0;
             at = records[static_cast<std::size_t>(at)].parent) {
            const Rec& rec = records[static_cast<std::size_t>(at)];
            chain.emplace_back(records[static_cast<std::size_t>(rec.parent)].state, rec.edge);
        }
        std::reverse(chain.begin(), chain.end());
        result.depth = records[static_cast<std::size_t>(goalIndex)].depth;
        result.path = buildReplayPath(start, chain);
    } else if (result.status != SearchStatus::BudgetHit) {
        result.status = SearchStatus::Exhausted;
    }

    result.stats.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// ---- the Akbulut-Kirby series ----------------------------------------------

// (x^n y^-(n+1), x y x y^-1 x^-1 y^-1) over (2, 0), with x = x1, y = x2
inline WordPair akPair(int n) {
    if (n < 2) throw std::invalid_argument("akPair requires n >= 2");
    const Alphabet& alphabet = searchAlphabet();
    Word x = Word::generator(alphabet, xGen(1));
    Word y = Word::generator(alphabet, xGen(2));
    Word u = x.pow(n) * y.pow(-(n + 1));
    Word v = x * y * x * y.inverse() * x.inverse() * y.inverse();
    return {u, v};
}

// ---- small-length classification -------------------------------------------

struct ClassifyItem {
    PairState state;
    long long det = 0;
    SearchStatus status = SearchStatus::Exhausted;
    int depth = 0;
};

struct ClassifyReport {
    int maxTotalLength = 0;
    long long canonicalPairs = 0;   // all canonical classes at the cap
    long long determinantExcluded = 0;
    std::vector<ClassifyItem> attempted;  // determinant +-1 classes, in order
    long long trivialized = 0;
    long long unresolved = 0;
};

inline std::vector<Word> canonicalWordsUpTo(std::size_t maxLen) {
    const Alphabet& alphabet = searchAlphabet();
    std::vector<Word> out{Word::identity(alphabet)};
    std::vector<Letter> all{Letter{xGen(1), 1}, Letter{xGen(1), -1}, Letter{xGen(2), 1},
                            Letter{xGen(2), -1}};
    // iterative deepening over reduced words, keeping canonical representatives
    std::vector<std::vector<Letter>> frontier{{}};
    for (std::size_t len = 1; len <= maxLen; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& stem : frontier)
            for (const Letter& l : all) {
                if (!stem.empty() && stem.back() == l.inverse()) continue;
                auto grown = stem;
                grown.push_back(l);
                next.push_back(std::move(grown));
            }
        for (const auto& seq : next) {
            Word w = Word::fromLetters(alphabet, seq);
            if (w.length() == len && w == canonicalWord(w)) out.push_back(w);
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), shortlexLess);
    return out;
}

inline long long abelianDeterminant(const Word& u, const Word& v) {
    long long a = u.exponentSum(xGen(1));
    long long b = u.exponentSum(xGen(2));
    long long c = v.exponentSum(xGen(1));
    long long d = v.exponentSum(xGen(2));
    return a * d - b * c;
}

inline ClassifyReport classifySmall(int maxTotalLength, const SearchBudget& budget) {
    ClassifyReport report;
    report.maxTotalLength = maxTotalLength;
    std::vector<Word> words = canonicalWordsUpTo(static_cast<std::size_t>(maxTotalLength));
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            const Word& u = words[i];
            const Word& v = words[j];
            if (u.length() + v.length() > static_cast<std::size_t>(maxTotalLength)) continue;
            ++report.canonicalPairs;
            long long det = abelianDeterminant(u, v);
            if (det != 1 && det != -1) {
                ++report.determinantExcluded;
                continue;
            }
            SearchResult r = bfsTrivialize({u, v}, budget);
            ClassifyItem item;
            item.state = PairState(u, v);
            item.det = det;
            item.status = r.status;
            item.depth = r.depth;
            report.attempted.push_back(item);
            if (r.status == SearchStatus::Found)
                ++report.trivialized;
            else
                ++report.unresolved;
        }
    }
    return report;
}

// ---- corpus files -----------------------------------------------------------
// UTF-8 lines "name: <word> ; <word>", '#' starts a comment line

struct CorpusEntry {
    std::string name;
    WordPair pair;
};

inline std::vector<CorpusEntry> parseCorpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::size_t pos = 0;
        detail::skipSpace(line, pos);
        if (pos >= line.size() || line[pos] == '#') continue;
        std::size_t colon = line.find(':', pos);
        if (colon == std::string::npos)
            throw ParseError("corpus line " + std::to_string(lineNo) + ": missing ':'", pos);
        std::string name = line.substr(pos, colon - pos);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        std::size_t semi = line.find(';', colon + 1);
        if (semi == std::string::npos)
            throw ParseError("corpus line " + std::to_string(lineNo) + ": missing ';'", colon);
        Word u = parseWord(std::string_view(line).substr(colon + 1, semi - colon - 1),
                           searchAlphabet());
        Word v = parseWord(std::string_view(line).substr(semi + 1), searchAlphabet());
        entries.push_back(CorpusEntry{name, {u, v}});
    }
    return entries;
}

inline void writeCorpus(std::ostream& out, const std::vector<CorpusEntry>& entries) {
    for (const CorpusEntry& e : entries)
        out << e.name << ": " << formatWord(e.pair.first) << " ; " << formatWord(e.pair.second)
            << "\n";
}

}  // namespace acgroups
