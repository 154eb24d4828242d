#pragma once

// Scramble generator shared by the search suite and the acceptance run: a
// random walk in the canonical-state graph that only takes mutually
// reversible edges, so the inverse path always exists within the same cap.

#include <random>
#include <utility>
#include <vector>

#include "acgroups/search.hpp"

namespace testgen {

inline acgroups::WordPair reversibleScramble(std::mt19937_64& rng, int steps, std::size_t cap) {
    using namespace acgroups;
    PairState st = goalState();
    WordPair actual{st.first, st.second};
    for (int step = 0; step < steps; ++step) {
        std::vector<std::pair<PairState, MoveEdge>> usable;
        for (auto& candidate : neighborsWithEdges(st, cap))
            if (rawEdgeExists(candidate.first, st, cap)) usable.push_back(candidate);
        if (usable.empty()) break;
        auto& [next, edge] =
            usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
        Word base = rotateWord(st.component(edge.slot), static_cast<std::size_t>(edge.baseRot));
        const Word& other = st.component(1 - edge.slot);
        Word mult = rotateWord(edge.multSign > 0 ? other : other.inverse(),
                               static_cast<std::size_t>(edge.multRot));
        actual = {base * mult, other};
        st = next;
    }
    return actual;
}

}  // namespace testgen
