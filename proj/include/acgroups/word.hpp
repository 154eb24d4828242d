#pragma once

// Freely reduced words over a ranked alphabet, with the text grammar for
// words and tuples. Words are immutable and always reduced, so equality is
// plain sequence comparison.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "acgroups/alphabet.hpp"

namespace acgroups {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

class Word {
public:
    Word() = default;
    explicit Word(const Alphabet& alphabet) : alpha_(alphabet) { alpha_.requireValid(); }

    static Word identity(const Alphabet& alphabet) { return Word(alphabet); }

    static Word generator(const Alphabet& alphabet, const Gen& g, int sign = 1) {
        alphabet.requireGen(g);
        Word w(alphabet);
        w.letters_.push_back(Letter{g, sign < 0 ? -1 : 1});
        return w;
    }

    static Word fromLetters(const Alphabet& alphabet, const std::vector<Letter>& letters) {
        Word w(alphabet);
        for (const Letter& l : letters) {
            alphabet.requireGen(l.gen);
            w.pushReduced(l);
        }
        return w;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        requireSameAlphabet(a.alpha_, b.alpha_);
        Word r = a;
        for (const Letter& l : b.letters_) r.pushReduced(l);
        return r;
    }

    Word inverse() const {
        Word r(alpha_);
        r.letters_.reserve(letters_.size());
        for (std::size_t i = letters_.size(); i-- > 0;) r.letters_.push_back(letters_[i].inverse());
        return r;
    }

    Word pow(long long e) const {
        Word base = e < 0 ? inverse() : *this;
        long long n = e < 0 ? -e : e;
        Word r(alpha_);
        for (long long i = 0; i < n; ++i) r = r * base;
        return r;
    }

    // exponent sum of a single generator
    long long exponentSum(const Gen& g) const {
        long long sum = 0;
        for (const Letter& l : letters_)
            if (l.gen == g) sum += l.sign;
        return sum;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.alpha_ == b.alpha_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    std::size_t hashValue() const {
        std::size_t h = 1469598103934665603ull;
        for (const Letter& l : letters_) {
            h = (h ^ static_cast<std::size_t>(l.gen.family)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(l.gen.index)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(l.sign + 2)) * 1099511628211ull;
        }
        return h;
    }

private:
    Alphabet alpha_;
    std::vector<Letter> letters_;

    void pushReduced(const Letter& l) {
        if (!letters_.empty() && letters_.back() == l.inverse())
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
};

// conjugate(g, f) = f g f^-1
inline Word conjugate(const Word& g, const Word& by) { return by * g * by.inverse(); }

// shortlex: length first, then letterwise x1 < x1^-1 < x2 < ... < y1 < ...
inline bool shortlexLess(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] != lb[i]) return la[i] < lb[i];
    }
    return false;
}

struct WordShortlexLess {
    bool operator()(const Word& a, const Word& b) const { return shortlexLess(a, b); }
};

namespace detail {

inline void skipSpace(std::string_view text, std::size_t& pos) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
}

inline long long parseSignedInt(std::string_view text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw ParseError(std::string("expected ") + what, start);
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw ParseError(std::string(what) + " too large", start);
        ++pos;
    }
    return neg ? -value : value;
}

}  // namespace detail

// Grammar: whitespace-separated tokens; token := ("x"|"y") index ["^" signed-int].
// "1" is accepted as the identity word.
inline Word parseWord(std::string_view text, const Alphabet& alphabet) {
    Word result = Word::identity(alphabet);
    std::size_t pos = 0;
    constexpr long long kMaxExpansion = 1 << 20;
    long long expanded = 0;
    while (true) {
        detail::skipSpace(text, pos);
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == '1') {
            ++pos;
            continue;
        }
        if (c != 'x' && c != 'y')
            throw ParseError("expected generator token 'x<i>' or 'y<i>'", pos);
        std::size_t tokenStart = pos;
        ++pos;
        long long index = detail::parseSignedInt(text, pos, "generator index");
        if (index < 1) throw ParseError("generator index must be >= 1", tokenStart);
        Gen g = c == 'x' ? xGen(static_cast<int>(index)) : yGen(static_cast<int>(index));
        if (!alphabet.contains(g))
            throw ParseError("generator " + genName(g) + " out of alphabet range", tokenStart);
        long long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = detail::parseSignedInt(text, pos, "exponent");
        }
        expanded += exponent < 0 ? -exponent : exponent;
        if (expanded > kMaxExpansion) throw ParseError("word expansion too large", tokenStart);
        result = result * Word::generator(alphabet, g).pow(exponent);
    }
    return result;
}

// Canonical output: runs of one generator collapse to a single token with an
// exponent; the identity prints as "1".
inline std::string formatWord(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    const auto& letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        long long run = static_cast<long long>(j - i) * letters[i].sign;
        if (!out.empty()) out.push_back(' ');
        out += genName(letters[i].gen);
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

// Tuple grammar: "(w1, w2, ...)".
inline std::vector<Word> parseWordTuple(std::string_view text, const Alphabet& alphabet) {
    std::size_t pos = 0;
    detail::skipSpace(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::size_t close = text.rfind(')');
    if (close == std::string_view::npos || close < pos) throw ParseError("expected ')'", text.size());
    std::size_t tail = close + 1;
    detail::skipSpace(text, tail);
    if (tail != text.size()) throw ParseError("trailing characters after tuple", tail);
    std::string_view body = text.substr(pos, close - pos);
    std::vector<Word> entries;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
        entries.push_back(parseWord(piece, alphabet));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return entries;
}

inline std::string formatWordTuple(const std::vector<Word>& entries) {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ", ";
        out += formatWord(entries[i]);
    }
    out += ")";
    return out;
}

}  // namespace acgroups
