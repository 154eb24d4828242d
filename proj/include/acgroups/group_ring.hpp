#pragma once

// Exact arithmetic in the integral group ring ZF_{r+s}. Elements are finite
// maps reduced-word -> nonzero integer coefficient, kept in shortlex order so
// equality and serialization are canonical.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acgroups/integer.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

class GroupRingElement {
public:
    using TermMap = std::map<Word, Integer, WordShortlexLess>;

    GroupRingElement() = default;
    explicit GroupRingElement(const Alphabet& alphabet) : alpha_(alphabet) {
        alpha_.requireValid();
    }

    static GroupRingElement zero(const Alphabet& alphabet) { return GroupRingElement(alphabet); }

    static GroupRingElement one(const Alphabet& alphabet) {
        return fromWord(Word::identity(alphabet));
    }

    static GroupRingElement fromWord(const Word& w, Integer coeff = Integer(1)) {
        GroupRingElement e(w.alphabet());
        e.addTerm(w, std::move(coeff));
        return e;
    }

    const Alphabet& alphabet() const { return alpha_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    bool isSingleWord(Word* out = nullptr) const {
        if (terms_.size() != 1 || !terms_.begin()->second.isOne()) return false;
        if (out) *out = terms_.begin()->first;
        return true;
    }

    void addTerm(const Word& w, const Integer& coeff) {
        requireSameAlphabet(alpha_, w.alphabet());
        if (coeff.isZero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, coeff);
        } else {
            it->second += coeff;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        requireSameAlphabet(a.alpha_, b.alpha_);
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_) r.addTerm(w, c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a) {
        GroupRingElement r(a.alpha_);
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        return a + (-b);
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        requireSameAlphabet(a.alpha_, b.alpha_);
        GroupRingElement r(a.alpha_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.addTerm(wa * wb, ca * cb);
        return r;
    }

    friend GroupRingElement operator*(const Integer& c, const GroupRingElement& a) {
        GroupRingElement r(a.alpha_);
        for (const auto& [w, coeff] : a.terms_) r.addTerm(w, c * coeff);
        return r;
    }

    GroupRingElement& operator+=(const GroupRingElement& b) { return *this = *this + b; }
    GroupRingElement& operator-=(const GroupRingElement& b) { return *this = *this - b; }
    GroupRingElement& operator*=(const GroupRingElement& b) { return *this = *this * b; }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
        return !(a == b);
    }

private:
    Alphabet alpha_;
    TermMap terms_;
};

// Augmentation: sum of coefficients (every group element -> 1).
inline Integer augment(const GroupRingElement& e) {
    Integer sum;
    for (const auto& [w, c] : e.terms()) sum += c;
    return sum;
}

inline std::string formatGroupRingElement(const GroupRingElement& e) {
    if (e.isZero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        bool negative = c.signum() < 0;
        Integer mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeffStr = mag.toString();
        if (w.empty()) {
            out += coeffStr;
        } else {
            if (!mag.isOne()) out += coeffStr + " ";
            out += formatWord(w);
        }
    }
    return out;
}

}  // namespace acgroups
