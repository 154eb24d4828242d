#pragma once

// Elementary AC-moves and AC-transformations on r-tuples of words over
// F_{r+s}. Move sequences act left-to-right; the endomorphism view composes
// the same way (first-applied first), so applying a transformation to a tuple
// is substitution into the basis images.
//
//   AC1(i,j): u_i -> u_i u_j          AC2(i,j): u_i -> u_j u_i
//   AC3(i)  : u_i -> u_i^-1           AC4(i,k): u_i -> y_k u_i y_k^-1
//   C(i,w)  : u_i -> w u_i w^-1       (classical conjugation move)

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "acgroups/endomorphism.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

struct ElementaryMove {
    enum class Kind { AC1, AC2, AC3, AC4, ConjFree };

    Kind kind = Kind::AC3;
    int i = 1;       // tuple slot acted on, 1-based
    int j = 0;       // other slot for AC1/AC2
    int k = 0;       // conjugator index for AC4
    Word conj;       // conjugating word for ConjFree
    bool inverted = false;

    ElementaryMove inverse() const {
        ElementaryMove m = *this;
        if (kind == Kind::AC3) return m;  // self-inverse
        m.inverted = !m.inverted;
        return m;
    }

    void validate(const Alphabet& alphabet) const {
        auto requireSlot = [&](int slot) {
            if (slot < 1 || slot > alphabet.xCount)
                throw std::invalid_argument("move index " + std::to_string(slot) +
                                            " out of range 1.." + std::to_string(alphabet.xCount));
        };
        switch (kind) {
            case Kind::AC1:
            case Kind::AC2:
                requireSlot(i);
                requireSlot(j);
                if (i == j) throw std::invalid_argument("AC1/AC2 require i != j");
                break;
            case Kind::AC3:
                requireSlot(i);
                break;
            case Kind::AC4:
                requireSlot(i);
                if (k < 1 || k > alphabet.yCount)
                    throw std::invalid_argument("AC4 conjugator index " + std::to_string(k) +
                                                " out of range 1.." +
                                                std::to_string(alphabet.yCount));
                break;
            case Kind::ConjFree:
                requireSlot(i);
                requireSameAlphabet(alphabet, conj.alphabet());
                break;
        }
    }

    friend bool operator==(const ElementaryMove& a, const ElementaryMove& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.k == b.k && a.conj == b.conj &&
               a.inverted == b.inverted;
    }
    friend bool operator!=(const ElementaryMove& a, const ElementaryMove& b) { return !(a == b); }
};

struct ACTransform {
    Alphabet alphabet;
    std::vector<ElementaryMove> moves;

    explicit ACTransform(const Alphabet& a = Alphabet{1, 0}) : alphabet(a) {
        alphabet.requireValid();
    }

    ACTransform(const Alphabet& a, std::vector<ElementaryMove> ms)
        : alphabet(a), moves(std::move(ms)) {
        alphabet.requireValid();
        for (const ElementaryMove& m : moves) m.validate(alphabet);
    }

    void push(const ElementaryMove& m) {
        m.validate(alphabet);
        moves.push_back(m);
    }

    ACTransform inverse() const {
        ACTransform r(alphabet);
        r.moves.reserve(moves.size());
        for (std::size_t idx = moves.size(); idx-- > 0;) r.moves.push_back(moves[idx].inverse());
        return r;
    }

    friend ACTransform operator*(const ACTransform& a, const ACTransform& b) {
        requireSameAlphabet(a.alphabet, b.alphabet);
        ACTransform r = a;
        r.moves.insert(r.moves.end(), b.moves.begin(), b.moves.end());
        return r;
    }

    // occurrences of AC4 moves or their inverses
    int conjugatorMoveCount() const {
        int count = 0;
        for (const ElementaryMove& m : moves)
            if (m.kind == ElementaryMove::Kind::AC4) ++count;
        return count;
    }

    friend bool operator==(const ACTransform& a, const ACTransform& b) {
        return a.alphabet == b.alphabet && a.moves == b.moves;
    }
    friend bool operator!=(const ACTransform& a, const ACTransform& b) { return !(a == b); }
};

// r-tuple of words over F_{r+s}; the conjugator components y_1..y_s are
// implicit and fixed.
struct GroupTuple {
    Alphabet alphabet;
    std::vector<Word> entries;

    explicit GroupTuple(const Alphabet& a = Alphabet{1, 0}) : alphabet(a) {
        alphabet.requireValid();
        entries.assign(static_cast<std::size_t>(alphabet.xCount), Word::identity(alphabet));
    }

    GroupTuple(const Alphabet& a, std::vector<Word> ws) : alphabet(a), entries(std::move(ws)) {
        alphabet.requireValid();
        if (static_cast<int>(entries.size()) != alphabet.xCount)
            throw std::invalid_argument("tuple must have exactly r entries");
        for (const Word& w : entries) requireSameAlphabet(alphabet, w.alphabet());
    }

    static GroupTuple basis(const Alphabet& alphabet) {
        GroupTuple t(alphabet);
        for (int i = 1; i <= alphabet.xCount; ++i)
            t.entries[static_cast<std::size_t>(i - 1)] = Word::generator(alphabet, xGen(i));
        return t;
    }

    Word& at(int i) { return entries.at(static_cast<std::size_t>(i - 1)); }
    const Word& at(int i) const { return entries.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const GroupTuple& a, const GroupTuple& b) {
        return a.alphabet == b.alphabet && a.entries == b.entries;
    }
    friend bool operator!=(const GroupTuple& a, const GroupTuple& b) { return !(a == b); }
};

inline GroupTuple applyMove(const ElementaryMove& m, const GroupTuple& u) {
    m.validate(u.alphabet);
    GroupTuple r = u;
    const int sign = m.inverted ? -1 : 1;
    switch (m.kind) {
        case ElementaryMove::Kind::AC1:
            r.at(m.i) = r.at(m.i) * u.at(m.j).pow(sign);
            break;
        case ElementaryMove::Kind::AC2:
            r.at(m.i) = u.at(m.j).pow(sign) * r.at(m.i);
            break;
        case ElementaryMove::Kind::AC3:
            r.at(m.i) = r.at(m.i).inverse();
            break;
        case ElementaryMove::Kind::AC4: {
            Word c = Word::generator(u.alphabet, yGen(m.k), sign);
            r.at(m.i) = conjugate(r.at(m.i), c);
            break;
        }
        case ElementaryMove::Kind::ConjFree: {
            Word c = m.inverted ? m.conj.inverse() : m.conj;
            r.at(m.i) = conjugate(r.at(m.i), c);
            break;
        }
    }
    return r;
}

inline GroupTuple applyTransform(const ACTransform& t, const GroupTuple& u) {
    requireSameAlphabet(t.alphabet, u.alphabet);
    GroupTuple r = u;
    for (const ElementaryMove& m : t.moves) r = applyMove(m, r);
    return r;
}

inline EndoMap toEndo(const ElementaryMove& m, const Alphabet& alphabet) {
    m.validate(alphabet);
    EndoMap e = EndoMap::identity(alphabet);
    const int sign = m.inverted ? -1 : 1;
    Gen target = xGen(m.i);
    Word xi = Word::generator(alphabet, target);
    switch (m.kind) {
        case ElementaryMove::Kind::AC1:
            e.setImage(target, xi * Word::generator(alphabet, xGen(m.j)).pow(sign));
            break;
        case ElementaryMove::Kind::AC2:
            e.setImage(target, Word::generator(alphabet, xGen(m.j)).pow(sign) * xi);
            break;
        case ElementaryMove::Kind::AC3:
            e.setImage(target, xi.inverse());
            break;
        case ElementaryMove::Kind::AC4:
            e.setImage(target, conjugate(xi, Word::generator(alphabet, yGen(m.k), sign)));
            break;
        case ElementaryMove::Kind::ConjFree:
            e.setImage(target, conjugate(xi, m.inverted ? m.conj.inverse() : m.conj));
            break;
    }
    return e;
}

inline EndoMap toEndo(const ACTransform& t) {
    EndoMap e = EndoMap::identity(t.alphabet);
    for (const ElementaryMove& m : t.moves) e = composeEndo(e, toEndo(m, t.alphabet));
    return e;
}

// Conjugator substitution: every AC4(i,k) becomes the classical conjugation
// C(i, x_k) over the alphabet (r, 0); all other moves carry over unchanged.
inline ACTransform substituteConjugators(const ACTransform& t) {
    Alphabet target{t.alphabet.xCount, 0};
    ACTransform r(target);
    for (const ElementaryMove& m : t.moves) {
        ElementaryMove out = m;
        if (m.kind == ElementaryMove::Kind::AC4) {
            if (m.k > target.xCount)
                throw std::invalid_argument("conjugator substitution needs k <= r, got k = " +
                                            std::to_string(m.k));
            out.kind = ElementaryMove::Kind::ConjFree;
            out.conj = Word::generator(target, xGen(m.k));
            out.k = 0;
        } else if (m.kind == ElementaryMove::Kind::ConjFree) {
            out.conj = Word::fromLetters(target, m.conj.letters());
        }
        r.push(out);
    }
    return r;
}

// Separating tuple u_i = x_{i+1}^{2m} x_i x_{i+1}^{2m} (indices cyclic, so the
// last entry uses x_1), written with two positive blocks.
inline GroupTuple witnessTuple(const Alphabet& alphabet, int m) {
    if (alphabet.xCount < 2) throw std::invalid_argument("witness tuple requires r >= 2");
    if (m < 0) throw std::invalid_argument("witness tuple requires m >= 0");
    GroupTuple t(alphabet);
    for (int i = 1; i <= alphabet.xCount; ++i) {
        int next = i == alphabet.xCount ? 1 : i + 1;
        Word block = Word::generator(alphabet, xGen(next)).pow(2LL * m);
        t.at(i) = block * Word::generator(alphabet, xGen(i)) * block;
    }
    return t;
}

inline GroupTuple witnessTuple(int m, int r) { return witnessTuple(Alphabet{r, 0}, m); }

// Identity test: the basis-image check plus the witness-tuple check, with m
// taken as the number of AC4 occurrences in the transformation.
inline bool isIdentityTransform(const ACTransform& t) {
    if (!toEndo(t).isIdentity()) return false;
    if (t.alphabet.xCount < 2) return true;  // no witness tuple below rank 2
    GroupTuple w = witnessTuple(t.alphabet, t.conjugatorMoveCount());
    return applyTransform(t, w) == w;
}

// ---- move-sequence text grammar ------------------------------------------
// semicolon-separated tokens AC1(i,j) AC2(i,j) AC3(i) AC4(i,k) C(i, <word>),
// each with an optional integer exponent; ^-1 inverts, larger exponents
// expand into repeated moves

namespace detail {

inline std::pair<ElementaryMove, long long> parseMoveWithExponent(std::string_view text,
                                                                  const Alphabet& alphabet,
                                                                  std::size_t offset) {
    std::size_t pos = 0;
    detail::skipSpace(text, pos);
    ElementaryMove m;
    auto expect = [&](char c) {
        detail::skipSpace(text, pos);
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' in move", offset + pos);
        ++pos;
    };
    auto parseIndex = [&]() {
        detail::skipSpace(text, pos);
        long long v = detail::parseSignedInt(text, pos, "move index");
        if (v < 1) throw ParseError("move index must be >= 1", offset + pos);
        return static_cast<int>(v);
    };

    if (text.compare(pos, 2, "AC") == 0) {
        pos += 2;
        if (pos >= text.size() || text[pos] < '1' || text[pos] > '4')
            throw ParseError("unknown move kind (expected AC1..AC4 or C)", offset + pos);
        int kindDigit = text[pos] - '0';
        ++pos;
        expect('(');
        m.i = parseIndex();
        switch (kindDigit) {
            case 1:
            case 2: {
                m.kind = kindDigit == 1 ? ElementaryMove::Kind::AC1 : ElementaryMove::Kind::AC2;
                expect(',');
                m.j = parseIndex();
                break;
            }
            case 3:
                m.kind = ElementaryMove::Kind::AC3;
                break;
            case 4:
                m.kind = ElementaryMove::Kind::AC4;
                expect(',');
                m.k = parseIndex();
                break;
        }
        expect(')');
    } else if (pos < text.size() && text[pos] == 'C') {
        ++pos;
        expect('(');
        m.kind = ElementaryMove::Kind::ConjFree;
        m.i = parseIndex();
        expect(',');
        std::size_t close = text.rfind(')');
        if (close == std::string_view::npos || close < pos)
            throw ParseError("expected ')' closing C(i, w)", offset + text.size());
        m.conj = parseWord(text.substr(pos, close - pos), alphabet);
        pos = close + 1;
    } else {
        throw ParseError("unknown move kind (expected AC1..AC4 or C)", offset + pos);
    }

    detail::skipSpace(text, pos);
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exponent = detail::parseSignedInt(text, pos, "move exponent");
    }
    detail::skipSpace(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after move", offset + pos);
    m.validate(alphabet);
    return {m, exponent};
}

}  // namespace detail

inline ElementaryMove parseMove(std::string_view text, const Alphabet& alphabet,
                                std::size_t offset = 0) {
    auto [m, exponent] = detail::parseMoveWithExponent(text, alphabet, offset);
    if (exponent != 1 && exponent != -1)
        throw ParseError("expected a single move (exponent must be 1 or -1)", offset);
    return exponent < 0 ? m.inverse() : m;
}

inline ACTransform parseTransform(std::string_view text, const Alphabet& alphabet) {
    ACTransform t(alphabet);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string_view piece =
            semi == std::string_view::npos ? text.substr(start) : text.substr(start, semi - start);
        std::size_t probe = 0;
        detail::skipSpace(piece, probe);
        if (probe < piece.size()) {
            auto [m, exponent] = detail::parseMoveWithExponent(piece, alphabet, start);
            ElementaryMove base = exponent < 0 ? m.inverse() : m;
            long long repeat = exponent < 0 ? -exponent : exponent;
            for (long long idx = 0; idx < repeat; ++idx) t.push(base);
        }
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return t;
}

inline std::string formatMove(const ElementaryMove& m) {
    std::string out;
    switch (m.kind) {
        case ElementaryMove::Kind::AC1:
            out = "AC1(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
            break;
        case ElementaryMove::Kind::AC2:
            out = "AC2(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
            break;
        case ElementaryMove::Kind::AC3:
            out = "AC3(" + std::to_string(m.i) + ")";
            break;
        case ElementaryMove::Kind::AC4:
            out = "AC4(" + std::to_string(m.i) + "," + std::to_string(m.k) + ")";
            break;
        case ElementaryMove::Kind::ConjFree:
            out = "C(" + std::to_string(m.i) + ", " + formatWord(m.conj) + ")";
            break;
    }
    if (m.inverted) out += "^-1";
    return out;
}

inline std::string formatTransform(const ACTransform& t) {
    std::string out;
    for (std::size_t idx = 0; idx < t.moves.size(); ++idx) {
        if (idx > 0) out += "; ";
        out += formatMove(t.moves[idx]);
    }
    return out;
}

}  // namespace acgroups
