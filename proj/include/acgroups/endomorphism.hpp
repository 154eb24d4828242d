#pragma once

// Endomorphisms of F_{r+s} given by generator images. Composition follows the
// artifact-wide left-to-right convention: composeEndo(a, b) applies a's
// substitution first, then b's.

#include <stdexcept>
#include <vector>

#include "acgroups/group_ring.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

class EndoMap {
public:
    EndoMap() = default;

    static EndoMap identity(const Alphabet& alphabet) {
        alphabet.requireValid();
        EndoMap e;
        e.alpha_ = alphabet;
        e.images_.reserve(static_cast<std::size_t>(alphabet.slots()));
        for (int slot = 0; slot < alphabet.slots(); ++slot)
            e.images_.push_back(Word::generator(alphabet, alphabet.genAt(slot)));
        return e;
    }

    const Alphabet& alphabet() const { return alpha_; }

    const Word& image(const Gen& g) const {
        return images_[static_cast<std::size_t>(alpha_.slotOf(g))];
    }

    void setImage(const Gen& g, const Word& w) {
        requireSameAlphabet(alpha_, w.alphabet());
        images_[static_cast<std::size_t>(alpha_.slotOf(g))] = w;
    }

    bool isIdentity() const { return *this == identity(alpha_); }

    // every endomorphism arising from an AC-transformation fixes the y-generators
    bool fixesConjugators() const {
        for (int k = 1; k <= alpha_.yCount; ++k)
            if (image(yGen(k)) != Word::generator(alpha_, yGen(k))) return false;
        return true;
    }

    Word apply(const Word& w) const {
        requireSameAlphabet(alpha_, w.alphabet());
        Word r = Word::identity(alpha_);
        for (const Letter& l : w.letters()) {
            const Word& img = image(l.gen);
            r = r * (l.sign > 0 ? img : img.inverse());
        }
        return r;
    }

    GroupRingElement apply(const GroupRingElement& e) const {
        requireSameAlphabet(alpha_, e.alphabet());
        GroupRingElement r = GroupRingElement::zero(alpha_);
        for (const auto& [w, c] : e.terms()) r.addTerm(apply(w), c);
        return r;
    }

    friend bool operator==(const EndoMap& a, const EndoMap& b) {
        return a.alpha_ == b.alpha_ && a.images_ == b.images_;
    }
    friend bool operator!=(const EndoMap& a, const EndoMap& b) { return !(a == b); }

private:
    Alphabet alpha_;
    std::vector<Word> images_;
};

inline EndoMap composeEndo(const EndoMap& a, const EndoMap& b) {
    requireSameAlphabet(a.alphabet(), b.alphabet());
    EndoMap r = EndoMap::identity(a.alphabet());
    for (int slot = 0; slot < a.alphabet().slots(); ++slot) {
        Gen g = a.alphabet().genAt(slot);
        r.setImage(g, b.apply(a.image(g)));
    }
    return r;
}

inline Word endoApply(const EndoMap& e, const Word& w) { return e.apply(w); }

}  // namespace acgroups
