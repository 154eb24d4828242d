#pragma once

// Magnus representation machinery: Jacobi matrices of endomorphisms over
// ZF_{r+s}, the Bachmuth embedding over Laurent rings, generator-image
// recovery, and the evaluated 2x2 projective representations.

#include <stdexcept>
#include <string>
#include <vector>

#include "acgroups/endomorphism.hpp"
#include "acgroups/fox.hpp"
#include "acgroups/laurent.hpp"
#include "acgroups/matrix.hpp"
#include "acgroups/moves.hpp"

namespace acgroups {

// J(e)(i,j) = D_j(image of generator i); rows and columns in slot order
// x1..xr, y1..ys. The identity map yields the identity matrix.
inline Matrix<GroupRingElement> jacobian(const EndoMap& e) {
    const Alphabet& alphabet = e.alphabet();
    int n = alphabet.slots();
    Matrix<GroupRingElement> m(n, GroupRingElement::zero(alphabet));
    for (int i = 0; i < n; ++i) {
        const Word& image = e.image(alphabet.genAt(i));
        for (int j = 0; j < n; ++j) m.at(i, j) = foxDerive(alphabet.genAt(j), image);
    }
    return m;
}

inline Matrix<GroupRingElement> applyEndoEntrywise(const EndoMap& e,
                                                   const Matrix<GroupRingElement>& m) {
    return m.map([&](const GroupRingElement& entry) { return e.apply(entry); });
}

inline Matrix<LaurentPoly> bachmuthJacobian(const EndoMap& e) {
    return jacobian(e).map([](const GroupRingElement& entry) { return abelianize(entry); });
}

struct RowRecoveryError : std::runtime_error {
    int row;
    explicit RowRecoveryError(int rowIndex)
        : std::runtime_error("row " + std::to_string(rowIndex) +
                             " is not the derivative vector of any single word"),
          row(rowIndex) {}
};

// Inverse of the Magnus representation: each row must satisfy
// sum_j entry(i,j) (f_j - 1) = w - 1 for a single word w, which is then the
// image of generator i.
inline EndoMap recoverImages(const Matrix<GroupRingElement>& m, const Alphabet& alphabet) {
    if (m.size() != alphabet.slots())
        throw std::invalid_argument("matrix size does not match alphabet");
    EndoMap e = EndoMap::identity(alphabet);
    GroupRingElement one = GroupRingElement::one(alphabet);
    for (int i = 0; i < m.size(); ++i) {
        GroupRingElement sum = GroupRingElement::zero(alphabet);
        for (int j = 0; j < m.size(); ++j) {
            Word gen = Word::generator(alphabet, alphabet.genAt(j));
            sum += m.at(i, j) * (GroupRingElement::fromWord(gen) - one);
        }
        // sum must be w - 1 (or 0, when w is the identity)
        Word image = Word::identity(alphabet);
        if (!sum.isZero()) {
            if (sum.terms().size() != 2) throw RowRecoveryError(i);
            bool found = false;
            for (const auto& [w, c] : sum.terms()) {
                if (w.empty()) {
                    if (!c.isMinusOne()) throw RowRecoveryError(i);
                } else {
                    if (!c.isOne() || found) throw RowRecoveryError(i);
                    image = w;
                    found = true;
                }
            }
            if (!found) throw RowRecoveryError(i);
        }
        e.setImage(alphabet.genAt(i), image);
    }
    return e;
}

// ---- projective classes over ZZ[t, t^-1] -----------------------------------

namespace detail {

inline int minTDegree(const Matrix<LaurentPoly>& m, bool* anyNonzero) {
    int minDeg = 0;
    bool seen = false;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            for (const auto& [exps, c] : m.at(i, j).terms()) {
                if (!seen || exps[0] < minDeg) minDeg = exps[0];
                seen = true;
            }
    if (anyNonzero) *anyNonzero = seen;
    return minDeg;
}

}  // namespace detail

// Canonical representative of a matrix class modulo the units +-t^k: scale so
// the minimum t-degree over all entries is 0, then fix the sign so the first
// nonzero entry (row-major) has a positive leading coefficient.
inline Matrix<LaurentPoly> projectiveCanonical(const Matrix<LaurentPoly>& m) {
    bool anyNonzero = false;
    int minDeg = detail::minTDegree(m, &anyNonzero);
    if (!anyNonzero) throw std::invalid_argument("zero matrix has no projective class");
    LaurentPoly scale = LaurentPoly::variable(1, 0, -minDeg);
    Matrix<LaurentPoly> r = m.map([&](const LaurentPoly& p) { return scale * p; });
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j) {
            const LaurentPoly& entry = r.at(i, j);
            if (entry.isZero()) continue;
            if (entry.terms().rbegin()->second.signum() < 0)
                r = r.map([](const LaurentPoly& p) { return -p; });
            return r;
        }
    return r;
}

inline bool projEqual(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) {
    if (a.size() != b.size()) return false;
    return projectiveCanonical(a) == projectiveCanonical(b);
}

class ProjectiveClass {
public:
    explicit ProjectiveClass(const Matrix<LaurentPoly>& representative)
        : rep_(projectiveCanonical(representative)) {}

    static ProjectiveClass identity(int n = 2) {
        return ProjectiveClass(
            Matrix<LaurentPoly>::identity(n, LaurentPoly::one(1), LaurentPoly::zero(1)));
    }

    const Matrix<LaurentPoly>& representative() const { return rep_; }
    bool isIdentity() const { return *this == identity(rep_.size()); }

    friend ProjectiveClass operator*(const ProjectiveClass& a, const ProjectiveClass& b) {
        return ProjectiveClass(a.rep_ * b.rep_);
    }

    friend bool operator==(const ProjectiveClass& a, const ProjectiveClass& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const ProjectiveClass& a, const ProjectiveClass& b) {
        return !(a == b);
    }

private:
    Matrix<LaurentPoly> rep_;
};

// Evaluation a_i -> 1 (i = 1, 2), b_j -> 1 for j != kappa, b_kappa -> t,
// from the abelianization of ZF_{2+m} to ZZ[t, t^-1].
inline EvaluationMap nuEvaluation(int m, int kappa) {
    if (m < 1 || kappa < 1 || kappa > m)
        throw std::invalid_argument("nu evaluation needs 1 <= kappa <= m");
    std::vector<LaurentPoly> images;
    for (int i = 0; i < 2 + m; ++i) {
        bool isKappa = i == 2 + kappa - 1;
        images.push_back(isKappa ? LaurentPoly::variable(1, 0) : LaurentPoly::one(1));
    }
    return EvaluationMap(2 + m, std::move(images));
}

// Evaluation a_1, a_2 -> 1, a_3 -> t on the rank-3 Laurent ring.
inline EvaluationMap etaEvaluation() {
    std::vector<LaurentPoly> images{LaurentPoly::one(1), LaurentPoly::one(1),
                                    LaurentPoly::variable(1, 0)};
    return EvaluationMap(3, std::move(images));
}

namespace detail {

inline void requireUnitRow(const Matrix<LaurentPoly>& m, int row) {
    for (int j = 0; j < m.size(); ++j) {
        const LaurentPoly& entry = m.at(row, j);
        bool ok = j == row ? entry.isOne() : entry.isZero();
        if (!ok)
            throw std::invalid_argument("expected unit row " + std::to_string(row) +
                                        " in block-triangular Jacobian");
    }
}

}  // namespace detail

// The homomorphism from AC-transformations over alphabet (2, m) into
// projective 2x2 Laurent matrices: Bachmuth Jacobian, x-block, then the
// kappa evaluation. Requires the y-rows to be unit rows (they are, for any
// transformation endomorphism) before truncating.
inline ProjectiveClass nu(const ACTransform& t, int kappa = 1) {
    if (t.alphabet.xCount != 2)
        throw std::invalid_argument("nu is defined for transformations over rank r = 2");
    int m = t.alphabet.yCount;
    if (kappa < 1 || kappa > m) throw std::invalid_argument("nu: kappa out of range");
    EndoMap e = toEndo(t);
    Matrix<LaurentPoly> full = bachmuthJacobian(e);
    for (int row = 2; row < full.size(); ++row) detail::requireUnitRow(full, row);
    EvaluationMap eval = nuEvaluation(m, kappa);
    Matrix<LaurentPoly> block(2, LaurentPoly::zero(1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) block.at(i, j) = eval(full.at(i, j));
    return ProjectiveClass(block);
}

// Evaluated image of a rank-3 endomorphism under the a_3 -> t evaluation,
// truncated to the 2x2 block. Defined when the evaluated matrix is
// block-diagonal with a trivial third row and column.
inline ProjectiveClass etaBarImage(const EndoMap& e) {
    if (e.alphabet() != Alphabet{3, 0})
        throw std::invalid_argument("etaBarImage expects an endomorphism of F_3");
    EvaluationMap eval = etaEvaluation();
    Matrix<LaurentPoly> full = bachmuthJacobian(e).map(eval);
    detail::requireUnitRow(full, 2);
    for (int i = 0; i < 2; ++i)
        if (!full.at(i, 2).isZero())
            throw std::invalid_argument("evaluated Jacobian does not split off a 2x2 block");
    Matrix<LaurentPoly> block(2, LaurentPoly::zero(1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) block.at(i, j) = full.at(i, j);
    return ProjectiveClass(block);
}

}  // namespace acgroups
