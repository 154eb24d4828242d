#pragma once

// Shared generators for the randomized suites. Everything takes an explicit
// engine so each test pins its own seed.

#include <random>
#include <vector>

#include "acgroups/endomorphism.hpp"
#include "acgroups/group_ring.hpp"
#include "acgroups/moves.hpp"
#include "acgroups/word.hpp"

namespace testgen {

using namespace acgroups;

inline Letter randomLetter(std::mt19937_64& rng, const Alphabet& a) {
    int slot = std::uniform_int_distribution<int>(0, a.slots() - 1)(rng);
    int sign = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1 : -1;
    return Letter{a.genAt(slot), sign};
}

inline Word randomReducedWord(std::mt19937_64& rng, const Alphabet& a, std::size_t len) {
    std::vector<Letter> letters;
    letters.reserve(len);
    while (letters.size() < len) {
        Letter l = randomLetter(rng, a);
        if (!letters.empty() && l == letters.back().inverse()) continue;
        letters.push_back(l);
    }
    return Word::fromLetters(a, letters);
}

inline GroupRingElement randomRingElement(std::mt19937_64& rng, const Alphabet& a, int maxTerms,
                                          std::size_t maxLen) {
    GroupRingElement e = GroupRingElement::zero(a);
    int terms = std::uniform_int_distribution<int>(1, maxTerms)(rng);
    for (int t = 0; t < terms; ++t) {
        std::size_t len = std::uniform_int_distribution<std::size_t>(0, maxLen)(rng);
        long long coeff = std::uniform_int_distribution<long long>(-5, 5)(rng);
        e.addTerm(randomReducedWord(rng, a, len), Integer(coeff));
    }
    return e;
}

// uniformly random move word in the generators of the transformation group
inline ACTransform randomTransform(std::mt19937_64& rng, const Alphabet& a, int moveCount) {
    ACTransform t(a);
    for (int idx = 0; idx < moveCount; ++idx) {
        int kindMax = a.yCount > 0 ? 3 : 2;
        if (a.xCount < 2) kindMax = a.yCount > 0 ? 3 : 2;  // AC1/AC2 need two slots
        int kind = std::uniform_int_distribution<int>(a.xCount < 2 ? 2 : 0, kindMax)(rng);
        bool inverted = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        auto slot = [&]() { return std::uniform_int_distribution<int>(1, a.xCount)(rng); };
        ElementaryMove m;
        m.inverted = inverted;
        switch (kind) {
            case 0:
            case 1: {
                m.kind = kind == 0 ? ElementaryMove::Kind::AC1 : ElementaryMove::Kind::AC2;
                m.i = slot();
                do {
                    m.j = slot();
                } while (m.j == m.i);
                break;
            }
            case 2:
                m.kind = ElementaryMove::Kind::AC3;
                m.i = slot();
                break;
            case 3:
                m.kind = ElementaryMove::Kind::AC4;
                m.i = slot();
                m.k = std::uniform_int_distribution<int>(1, a.yCount)(rng);
                break;
        }
        t.push(m);
    }
    return t;
}

// random automorphism built from the elementary Nielsen maps
// f_i -> f_i f_j, f_i -> f_j f_i, f_i -> f_i^-1
inline EndoMap randomNielsenAutomorphism(std::mt19937_64& rng, const Alphabet& a, int count) {
    EndoMap e = EndoMap::identity(a);
    int n = a.slots();
    for (int step = 0; step < count; ++step) {
        EndoMap g = EndoMap::identity(a);
        int kind = std::uniform_int_distribution<int>(0, n >= 2 ? 2 : 0)(rng);
        int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
        Gen gi = a.genAt(i);
        if (kind == 2 || n < 2) {
            g.setImage(gi, Word::generator(a, gi, -1));
        } else {
            int j;
            do {
                j = std::uniform_int_distribution<int>(0, n - 1)(rng);
            } while (j == i);
            Word wi = Word::generator(a, gi);
            Word wj = Word::generator(a, a.genAt(j));
            g.setImage(gi, kind == 0 ? wi * wj : wj * wi);
        }
        e = composeEndo(e, g);
    }
    return e;
}

// product of conjugated commutators: an element of the commutator subgroup
inline Word randomCommutatorElement(std::mt19937_64& rng, const Alphabet& a, int factors) {
    Word w = Word::identity(a);
    for (int idx = 0; idx < factors; ++idx) {
        Word p = randomReducedWord(rng, a, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
        Word q = randomReducedWord(rng, a, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
        Word comm = p * q * p.inverse() * q.inverse();
        Word c = randomReducedWord(rng, a, std::uniform_int_distribution<std::size_t>(0, 3)(rng));
        w = w * conjugate(comm, c);
    }
    return w;
}

}  // namespace testgen
