#pragma once

// Multivariate Laurent polynomials with exact integer coefficients, plus the
// evaluation homomorphisms between Laurent rings (variable -> unit monomial).
// Abelianization of ZF_{r+s} lands in the ring with variables a1..ar, b1..bs
// (in that slot order); the rank-one ring ZZ[t, t^-1] is the one-variable case.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "acgroups/group_ring.hpp"
#include "acgroups/integer.hpp"

namespace acgroups {

class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Integer>;

    LaurentPoly() = default;
    explicit LaurentPoly(int vars) : vars_(vars) {
        if (vars < 1) throw std::invalid_argument("LaurentPoly needs at least one variable");
    }

    static LaurentPoly zero(int vars) { return LaurentPoly(vars); }

    static LaurentPoly constant(int vars, Integer c) {
        LaurentPoly p(vars);
        p.addTerm(Exponents(static_cast<std::size_t>(vars), 0), std::move(c));
        return p;
    }

    static LaurentPoly one(int vars) { return constant(vars, Integer(1)); }

    static LaurentPoly monomial(int vars, const Exponents& exps, Integer c = Integer(1)) {
        LaurentPoly p(vars);
        p.addTerm(exps, std::move(c));
        return p;
    }

    static LaurentPoly variable(int vars, int slot, int power = 1) {
        Exponents e(static_cast<std::size_t>(vars), 0);
        e.at(static_cast<std::size_t>(slot)) = power;
        return monomial(vars, e);
    }

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    bool isOne() const {
        return terms_.size() == 1 && terms_.begin()->second.isOne() &&
               terms_.begin()->first == Exponents(static_cast<std::size_t>(vars_), 0);
    }

    // units of a Laurent ring are exactly +-(monomial)
    bool isUnit() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second.isOne() || terms_.begin()->second.isMinusOne());
    }

    LaurentPoly unitInverse() const {
        if (!isUnit()) throw std::invalid_argument("not a unit of the Laurent ring");
        Exponents e = terms_.begin()->first;
        for (int& v : e) v = -v;
        return monomial(vars_, e, terms_.begin()->second);
    }

    void addTerm(const Exponents& exps, const Integer& coeff) {
        if (static_cast<int>(exps.size()) != vars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (coeff.isZero()) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second += coeff;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.requireSameRing(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.addTerm(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.vars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.requireSameRing(b);
        LaurentPoly r(a.vars_);
        Exponents sum(static_cast<std::size_t>(a.vars_), 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
                r.addTerm(sum, ca * cb);
            }
        return r;
    }

    friend LaurentPoly operator*(const Integer& c, const LaurentPoly& a) {
        LaurentPoly r(a.vars_);
        for (const auto& [e, coeff] : a.terms_) r.addTerm(e, c * coeff);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly pow(long long e) const {
        LaurentPoly base = *this;
        if (e < 0) {
            base = unitInverse();
            e = -e;
        }
        LaurentPoly r = one(vars_);
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    void requireSameRing(const LaurentPoly& b) const {
        if (vars_ != b.vars_)
            throw std::invalid_argument("Laurent ring mismatch: " + std::to_string(vars_) +
                                        " vs " + std::to_string(b.vars_) + " variables");
    }

private:
    int vars_ = 1;
    TermMap terms_;
};

// Ring homomorphism between Laurent rings given by per-variable unit images.
class EvaluationMap {
public:
    EvaluationMap(int sourceVars, std::vector<LaurentPoly> images)
        : sourceVars_(sourceVars), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != sourceVars_)
            throw std::invalid_argument("evaluation map must assign every source variable");
        if (images_.empty()) throw std::invalid_argument("empty evaluation map");
        targetVars_ = images_.front().vars();
        for (const LaurentPoly& img : images_) {
            if (img.vars() != targetVars_)
                throw std::invalid_argument("evaluation images live in different rings");
            if (!img.isUnit())
                throw std::invalid_argument("evaluation images must be units (+- monomials)");
        }
    }

    int sourceVars() const { return sourceVars_; }
    int targetVars() const { return targetVars_; }
    const std::vector<LaurentPoly>& images() const { return images_; }

    LaurentPoly operator()(const LaurentPoly& p) const {
        if (p.vars() != sourceVars_)
            throw std::invalid_argument("polynomial has unassigned variables");
        LaurentPoly r = LaurentPoly::zero(targetVars_);
        for (const auto& [exps, coeff] : p.terms()) {
            LaurentPoly term = LaurentPoly::constant(targetVars_, coeff);
            for (int i = 0; i < sourceVars_; ++i)
                if (exps[static_cast<std::size_t>(i)] != 0)
                    term *= images_[static_cast<std::size_t>(i)].pow(exps[static_cast<std::size_t>(i)]);
            r += term;
        }
        return r;
    }

private:
    int sourceVars_;
    int targetVars_ = 1;
    std::vector<LaurentPoly> images_;
};

// x_i -> a_i, y_k -> b_k as commuting variables; words map to the monomial of
// their exponent sums. A ring homomorphism ZF_{r+s} -> Lambda.
inline LaurentPoly abelianize(const GroupRingElement& e) {
    int vars = e.alphabet().slots();
    LaurentPoly r = LaurentPoly::zero(vars);
    for (const auto& [w, c] : e.terms()) {
        LaurentPoly::Exponents exps(static_cast<std::size_t>(vars), 0);
        for (const Letter& l : w.letters())
            exps[static_cast<std::size_t>(e.alphabet().slotOf(l.gen))] += l.sign;
        r.addTerm(exps, c);
    }
    return r;
}

inline LaurentPoly abelianize(const Word& w) { return abelianize(GroupRingElement::fromWord(w)); }

// Variable names for the abelianization of ZF_{r+s}: a1..ar, b1..bs.
inline std::vector<std::string> abelianVarNames(const Alphabet& alphabet) {
    std::vector<std::string> names;
    for (int i = 1; i <= alphabet.xCount; ++i) names.push_back("a" + std::to_string(i));
    for (int k = 1; k <= alphabet.yCount; ++k) names.push_back("b" + std::to_string(k));
    return names;
}

inline std::string formatLaurentPoly(const LaurentPoly& p,
                                     const std::vector<std::string>& varNames) {
    if (static_cast<int>(varNames.size()) != p.vars())
        throw std::invalid_argument("variable name count mismatch");
    if (p.isZero()) return "0";
    std::string out;
    for (const auto& [exps, c] : p.terms()) {
        bool negative = c.signum() < 0;
        Integer mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += varNames[i];
            if (exps[i] != 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += mag.toString();
        } else {
            if (!mag.isOne()) out += mag.toString() + " ";
            out += mono;
        }
    }
    return out;
}

}  // namespace acgroups
