#pragma once

// Ranked alphabet for free groups F_{r+s}: r acting generators x1..xr and
// s conjugator generators y1..ys. Indices are 1-based throughout.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acgroups {

enum class GenFamily : std::uint8_t { Acting, Conjugator };  // x-family, y-family

struct Gen {
    GenFamily family = GenFamily::Acting;
    int index = 1;

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.family == b.family && a.index == b.index;
    }
    friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.index < b.index;
    }
};

inline Gen xGen(int index) { return Gen{GenFamily::Acting, index}; }
inline Gen yGen(int index) { return Gen{GenFamily::Conjugator, index}; }

inline std::string genName(const Gen& g) {
    return (g.family == GenFamily::Acting ? "x" : "y") + std::to_string(g.index);
}

struct Alphabet {
    int xCount = 0;  // r >= 1
    int yCount = 0;  // s >= 0

    bool contains(const Gen& g) const {
        if (g.index < 1) return false;
        return g.index <= (g.family == GenFamily::Acting ? xCount : yCount);
    }

    void requireValid() const {
        if (xCount < 1 || yCount < 0)
            throw std::invalid_argument("alphabet requires r >= 1, s >= 0");
    }

    void requireGen(const Gen& g) const {
        if (!contains(g))
            throw std::invalid_argument("generator " + genName(g) + " outside alphabet (r=" +
                                        std::to_string(xCount) + ", s=" + std::to_string(yCount) +
                                        ")");
    }

    int slots() const { return xCount + yCount; }

    // 0-based slot order: x1..xr, y1..ys
    int slotOf(const Gen& g) const {
        requireGen(g);
        return g.family == GenFamily::Acting ? g.index - 1 : xCount + g.index - 1;
    }

    Gen genAt(int slot) const {
        if (slot < 0 || slot >= slots()) throw std::invalid_argument("slot out of range");
        return slot < xCount ? xGen(slot + 1) : yGen(slot - xCount + 1);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.xCount == b.xCount && a.yCount == b.yCount;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }
};

inline void requireSameAlphabet(const Alphabet& a, const Alphabet& b) {
    if (a != b)
        throw std::invalid_argument("alphabet mismatch: (" + std::to_string(a.xCount) + "," +
                                    std::to_string(a.yCount) + ") vs (" + std::to_string(b.xCount) +
                                    "," + std::to_string(b.yCount) + ")");
}

// One letter of a word: a generator or its inverse.
struct Letter {
    Gen gen;
    int sign = 1;  // +1 or -1

    Letter inverse() const { return Letter{gen, -sign}; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
    // x1 < x1^-1 < x2 < ... < y1 < y1^-1 < ...
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.sign > b.sign;
    }
};

}  // namespace acgroups
