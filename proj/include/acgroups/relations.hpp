#pragma once

// The concrete relation families: the matrix families built from d, e0, u in
// GL_2(ZZ[t, t^-1]), the commutator family of transformations over alphabet
// (2, m), and the structure checks for the rank-1 groups.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acgroups/magnus.hpp"
#include "acgroups/matrix.hpp"
#include "acgroups/moves.hpp"

namespace acgroups {

inline Matrix<LaurentPoly> laurentIdentity2() {
    return Matrix<LaurentPoly>::identity(2, LaurentPoly::one(1), LaurentPoly::zero(1));
}

// d = [[t,0],[0,1]], e0 = [[1,1],[0,1]], u = [[1,t-1],[0,1]]
inline Matrix<LaurentPoly> matD() {
    Matrix<LaurentPoly> m = laurentIdentity2();
    m.at(0, 0) = LaurentPoly::variable(1, 0);
    return m;
}

inline Matrix<LaurentPoly> matE0() {
    Matrix<LaurentPoly> m = laurentIdentity2();
    m.at(0, 1) = LaurentPoly::one(1);
    return m;
}

inline Matrix<LaurentPoly> matU() {
    Matrix<LaurentPoly> m = laurentIdentity2();
    m.at(0, 1) = LaurentPoly::variable(1, 0) - LaurentPoly::one(1);
    return m;
}

// inverse of a 2x2 matrix with unit determinant (adjugate / det)
inline Matrix<LaurentPoly> inverse2(const Matrix<LaurentPoly>& m) {
    if (m.size() != 2) throw std::invalid_argument("inverse2 expects a 2x2 matrix");
    LaurentPoly det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (!det.isUnit())
        throw std::invalid_argument("matrix is not invertible over the Laurent ring");
    LaurentPoly detInv = det.unitInverse();
    Matrix<LaurentPoly> r(2, LaurentPoly::zero(1));
    r.at(0, 0) = detInv * m.at(1, 1);
    r.at(0, 1) = -(detInv * m.at(0, 1));
    r.at(1, 0) = -(detInv * m.at(1, 0));
    r.at(1, 1) = detInv * m.at(0, 0);
    return r;
}

inline Matrix<LaurentPoly> matPow(const Matrix<LaurentPoly>& m, long long k) {
    Matrix<LaurentPoly> base = k < 0 ? inverse2(m) : m;
    long long n = k < 0 ? -k : k;
    Matrix<LaurentPoly> r = laurentIdentity2();
    for (long long i = 0; i < n; ++i) r = r * base;
    return r;
}

// [e0, d^k e0 d^-k], computed as the full matrix product
inline Matrix<LaurentPoly> q1(long long k) {
    if (k < 1) throw std::invalid_argument("q1 requires k >= 1");
    Matrix<LaurentPoly> e0 = matE0();
    Matrix<LaurentPoly> x = matPow(matD(), k) * e0 * matPow(matD(), -k);
    return e0 * x * inverse2(e0) * inverse2(x);
}

// d^k (ud)^-k d^k (u^-1 d)^-k
inline Matrix<LaurentPoly> q2(long long k) {
    if (k < 1) throw std::invalid_argument("q2 requires k >= 1");
    Matrix<LaurentPoly> d = matD();
    Matrix<LaurentPoly> u = matU();
    return matPow(d, k) * matPow(u * d, -k) * matPow(d, k) * matPow(inverse2(u) * d, -k);
}

// The commutator [AC2(1,2), AC4(2,kappa)^k ; AC1(1,2) ; AC4(2,kappa)^-k]
// as a move word over alphabet (2, m).
inline ACTransform commutatorRelation(int k, int m, int kappa) {
    if (k < 1) throw std::invalid_argument("commutatorRelation requires k >= 1");
    if (m < 1 || kappa < 1 || kappa > m)
        throw std::invalid_argument("commutatorRelation requires 1 <= kappa <= m");
    Alphabet alphabet{2, m};
    ACTransform left(alphabet);
    left.push(ElementaryMove{ElementaryMove::Kind::AC2, 1, 2, 0, Word(), false});
    ACTransform right(alphabet);
    for (int idx = 0; idx < k; ++idx)
        right.push(ElementaryMove{ElementaryMove::Kind::AC4, 2, 0, kappa, Word(), false});
    right.push(ElementaryMove{ElementaryMove::Kind::AC1, 1, 2, 0, Word(), false});
    for (int idx = 0; idx < k; ++idx)
        right.push(ElementaryMove{ElementaryMove::Kind::AC4, 2, 0, kappa, Word(), true});
    return left * right * left.inverse() * right.inverse();
}

// The conjugated factor AC4(2,kappa)^k ; AC1(1,2) ; AC4(2,kappa)^-k alone.
inline ACTransform conjugatedMultiplication(int k, int m, int kappa) {
    if (m < 1 || kappa < 1 || kappa > m)
        throw std::invalid_argument("conjugatedMultiplication requires 1 <= kappa <= m");
    Alphabet alphabet{2, m};
    ACTransform t(alphabet);
    for (int idx = 0; idx < k; ++idx)
        t.push(ElementaryMove{ElementaryMove::Kind::AC4, 2, 0, kappa, Word(), false});
    t.push(ElementaryMove{ElementaryMove::Kind::AC1, 1, 2, 0, Word(), false});
    for (int idx = 0; idx < k; ++idx)
        t.push(ElementaryMove{ElementaryMove::Kind::AC4, 2, 0, kappa, Word(), true});
    return t;
}

struct RelationReport {
    std::string family;                 // q1 | q2 | commutator | A1m
    std::string instance;               // the k value or move word checked
    bool holds = false;
    std::optional<bool> actionIdentity;  // identity as a transformation
    std::optional<bool> nuIdentity;      // nu-image is the identity class
    std::optional<std::string> witness;  // set only when holds is false
};

// Action-level identity check combined with the matrix-level check; the two
// are recorded separately so a failure in one cannot mask the other.
inline RelationReport verifyRelation(const ACTransform& t, int kappa = 1) {
    RelationReport report;
    report.family = "commutator";
    report.instance = formatTransform(t);
    bool action = isIdentityTransform(t);
    report.actionIdentity = action;
    bool nuOk = true;
    if (t.alphabet.xCount == 2 && t.alphabet.yCount >= 1 && kappa >= 1 &&
        kappa <= t.alphabet.yCount) {
        ProjectiveClass image = nu(t, kappa);
        nuOk = image.isIdentity();
        report.nuIdentity = nuOk;
    }
    report.holds = action && nuOk;
    if (!report.holds) {
        EndoMap e = toEndo(t);
        std::string w = "images:";
        for (int slot = 0; slot < t.alphabet.slots(); ++slot) {
            Gen g = t.alphabet.genAt(slot);
            w += " " + genName(g) + " -> " + formatWord(e.image(g)) + ";";
        }
        report.witness = w;
    }
    return report;
}

// Structure checks for the rank-1 groups: the inversion has order 2 and
// commutes with every conjugation; random nonempty reduced words in the
// conjugation generators act non-identically (sampled freeness evidence).
inline RelationReport checkA1mStructure(int m, int trials, unsigned long long seed = 20240901ull) {
    if (m < 1) throw std::invalid_argument("checkA1mStructure requires m >= 1");
    Alphabet alphabet{1, m};
    RelationReport report;
    report.family = "A1m";
    report.instance = "m=" + std::to_string(m) + ", trials=" + std::to_string(trials);

    auto inversionMove = ElementaryMove{ElementaryMove::Kind::AC3, 1, 0, 0, Word(), false};
    auto conjMove = [&](int k, bool inv) {
        return ElementaryMove{ElementaryMove::Kind::AC4, 1, 0, k, Word(), inv};
    };

    // (a) inversion squares to the identity (and is itself non-identity)
    ACTransform inv2(alphabet, {inversionMove, inversionMove});
    ACTransform inv1(alphabet, {inversionMove});
    bool order2 = toEndo(inv2).isIdentity() && !toEndo(inv1).isIdentity();

    // (b) inversion commutes with every conjugation generator
    bool commutes = true;
    for (int k = 1; k <= m; ++k) {
        ACTransform ab(alphabet, {inversionMove, conjMove(k, false)});
        ACTransform ba(alphabet, {conjMove(k, false), inversionMove});
        if (toEndo(ab) != toEndo(ba)) commutes = false;
    }

    // (c) sampled freeness: nonempty reduced words act non-identically
    std::mt19937_64 rng(seed);
    bool free = true;
    for (int trial = 0; trial < trials && free; ++trial) {
        std::uniform_int_distribution<int> lenDist(1, 8);
        int len = lenDist(rng);
        ACTransform t(alphabet);
        int prevK = 0;
        bool prevInv = false;
        for (int pos = 0; pos < len; ++pos) {
            int k;
            bool invFlag;
            do {
                k = std::uniform_int_distribution<int>(1, m)(rng);
                invFlag = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
            } while (pos > 0 && k == prevK && invFlag != prevInv);  // keep the word reduced
            t.push(conjMove(k, invFlag));
            prevK = k;
            prevInv = invFlag;
        }
        if (toEndo(t).isIdentity()) free = false;
    }

    report.holds = order2 && commutes && free;
    if (!report.holds) {
        report.witness = std::string("order2=") + (order2 ? "true" : "false") +
                         " commutes=" + (commutes ? "true" : "false") +
                         " freeness=" + (free ? "true" : "false");
    }
    return report;
}

}  // namespace acgroups
