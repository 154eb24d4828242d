#pragma once

// Left Fox derivatives on ZF_{r+s}: D_j(f_j) = 1, D_j(f_i) = 0 for i != j,
// D_j(uv) = D_j(u) + u D_j(v). On a single reduced word the derivative is a
// one-pass prefix scan: a positive occurrence of f_j at position p contributes
// +prefix(p), a negative one contributes -(prefix(p) * f_j^-1).

#include <stdexcept>
#include <vector>

#include "acgroups/group_ring.hpp"
#include "acgroups/laurent.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

inline GroupRingElement foxDerive(const Gen& wrt, const Word& w) {
    const Alphabet& alphabet = w.alphabet();
    alphabet.requireGen(wrt);
    GroupRingElement r = GroupRingElement::zero(alphabet);
    Word prefix = Word::identity(alphabet);
    for (const Letter& l : w.letters()) {
        if (l.gen == wrt) {
            if (l.sign > 0) {
                r.addTerm(prefix, Integer(1));
            } else {
                r.addTerm(prefix * Word::generator(alphabet, l.gen, -1), Integer(-1));
            }
        }
        prefix = prefix * Word::generator(alphabet, l.gen, l.sign);
    }
    return r;
}

inline GroupRingElement foxDerive(const Gen& wrt, const GroupRingElement& e) {
    e.alphabet().requireGen(wrt);
    GroupRingElement r = GroupRingElement::zero(e.alphabet());
    for (const auto& [w, c] : e.terms()) r += c * foxDerive(wrt, w);
    return r;
}

// sum_j D_j(e) (f_j - 1) = e - eps(e), over all r+s derivative slots
inline bool mainIdentityCheck(const GroupRingElement& e) {
    const Alphabet& alphabet = e.alphabet();
    GroupRingElement lhs = GroupRingElement::zero(alphabet);
    for (int slot = 0; slot < alphabet.slots(); ++slot) {
        Gen g = alphabet.genAt(slot);
        GroupRingElement factor = GroupRingElement::fromWord(Word::generator(alphabet, g)) -
                                  GroupRingElement::one(alphabet);
        lhs += foxDerive(g, e) * factor;
    }
    GroupRingElement rhs = e - augment(e) * GroupRingElement::one(alphabet);
    return lhs == rhs;
}

// General derivative sum_j D_j(e) alpha_j; one coefficient per slot, applied
// by right multiplication.
inline GroupRingElement generalDerivative(const std::vector<GroupRingElement>& coeffs,
                                          const GroupRingElement& e) {
    const Alphabet& alphabet = e.alphabet();
    if (static_cast<int>(coeffs.size()) != alphabet.slots())
        throw std::invalid_argument("generalDerivative: expected one coefficient per generator");
    GroupRingElement r = GroupRingElement::zero(alphabet);
    for (int slot = 0; slot < alphabet.slots(); ++slot) {
        requireSameAlphabet(alphabet, coeffs[static_cast<std::size_t>(slot)].alphabet());
        r += foxDerive(alphabet.genAt(slot), e) * coeffs[static_cast<std::size_t>(slot)];
    }
    return r;
}

// Induced derivative into the abelianized coefficient ring: d_j = abelianize o D_j.
inline LaurentPoly inducedDerive(const Gen& wrt, const GroupRingElement& e) {
    return abelianize(foxDerive(wrt, e));
}

inline LaurentPoly inducedDerive(const Gen& wrt, const Word& w) {
    return abelianize(foxDerive(wrt, w));
}

}  // namespace acgroups
