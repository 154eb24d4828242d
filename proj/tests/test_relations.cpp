#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acgroups/relations.hpp"
#include "helpers.hpp"

using namespace acgroups;

namespace {

LaurentPoly tvar() { return LaurentPoly::variable(1, 0); }

}  // namespace

TEST_CASE("the constant matrices") {
    Matrix<LaurentPoly> d = matD();
    CHECK(d.at(0, 0) == tvar());
    CHECK(d.at(0, 1).isZero());
    CHECK(d.at(1, 0).isZero());
    CHECK(d.at(1, 1).isOne());

    Matrix<LaurentPoly> e0 = matE0();
    CHECK(e0.at(0, 0).isOne());
    CHECK(e0.at(0, 1).isOne());
    CHECK(e0.at(1, 1).isOne());

    Matrix<LaurentPoly> u = matU();
    CHECK(u.at(0, 1) == tvar() - LaurentPoly::one(1));

    CHECK(d * inverse2(d) == laurentIdentity2());
    CHECK(inverse2(e0) * e0 == laurentIdentity2());

    // u at t = 1 is the identity
    EvaluationMap atOne(1, {LaurentPoly::one(1)});
    CHECK(u.map(atOne) == laurentIdentity2());
}

TEST_CASE("matrix powers") {
    // d^k e0 d^-k = [[1, t^k],[0,1]]
    for (int k = 1; k <= 5; ++k) {
        Matrix<LaurentPoly> m = matPow(matD(), k) * matE0() * matPow(matD(), -k);
        Matrix<LaurentPoly> expected = laurentIdentity2();
        expected.at(0, 1) = tvar().pow(k);
        CHECK(m == expected);
    }
    CHECK(matPow(matU(), 0) == laurentIdentity2());
    CHECK(matPow(matU(), -2) * matPow(matU(), 2) == laurentIdentity2());
}

TEST_CASE("q1 and q2 are relations of the projective group") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(projEqual(q1(k), laurentIdentity2()));
        CHECK(projEqual(q2(k), laurentIdentity2()));
        // both families are exactly the identity, not merely projectively
        CHECK(q1(k) == laurentIdentity2());
        CHECK(q2(k) == laurentIdentity2());
    }
    CHECK_THROWS_AS(q1(0), std::invalid_argument);
    CHECK_THROWS_AS(q2(0), std::invalid_argument);
}

TEST_CASE("commutator move word shape") {
    ACTransform t = commutatorRelation(1, 3, 3);
    CHECK(t.moves.size() == 8);  // 1 + 3 + 1 + 3
    CHECK(t.alphabet == Alphabet{2, 3});
    CHECK(commutatorRelation(4, 1, 1).moves.size() == 2 * (1 + (2 * 4 + 1)));

    CHECK_THROWS_AS(commutatorRelation(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(commutatorRelation(0, 1, 1), std::invalid_argument);
}

TEST_CASE("commutator family acts as the identity") {
    CHECK(toEndo(commutatorRelation(1, 3, 3)).isIdentity());
    CHECK(toEndo(commutatorRelation(4, 1, 1)).isIdentity());
    for (int k = 1; k <= 6; ++k) {
        CHECK(isIdentityTransform(commutatorRelation(k, 3, 2)));
    }
}

TEST_CASE("verifyRelation reports both layers") {
    for (int k = 1; k <= 16; ++k) {
        for (int m : {1, 3}) {
            int kappa = m == 1 ? 1 : 3;
            RelationReport r = verifyRelation(commutatorRelation(k, m, kappa), kappa);
            CHECK(r.holds);
            CHECK(r.actionIdentity.value());
            CHECK(r.nuIdentity.value());
            CHECK(!r.witness.has_value());
        }
    }

    ACTransform single(Alphabet{2, 1});
    single.push(ElementaryMove{ElementaryMove::Kind::AC3, 1, 0, 0, Word(), false});
    RelationReport bad = verifyRelation(single, 1);
    CHECK(!bad.holds);
    CHECK(!bad.actionIdentity.value());
    CHECK(bad.witness.has_value());
}

TEST_CASE("nu images of the commutator factors follow the matrix pattern") {
    // left factor maps to e0; the conjugated factor to d^(sigma k) e0 d^(-sigma k)
    Alphabet a23{2, 3};
    ACTransform left(a23);
    left.push(ElementaryMove{ElementaryMove::Kind::AC2, 1, 2, 0, Word(), false});
    CHECK(nu(left, 3) == ProjectiveClass(matE0()));

    int sigma = 0;
    {
        ProjectiveClass first = nu(conjugatedMultiplication(1, 3, 3), 3);
        if (first == ProjectiveClass(matD() * matE0() * inverse2(matD())))
            sigma = 1;
        else
            sigma = -1;
    }
    for (int k = 1; k <= 8; ++k) {
        ProjectiveClass factor = nu(conjugatedMultiplication(k, 3, 3), 3);
        Matrix<LaurentPoly> conjForm =
            matPow(matD(), sigma * k) * matE0() * matPow(matD(), -sigma * k);
        CHECK(factor == ProjectiveClass(conjForm));

        // the whole commutator maps to the evaluated matrix commutator
        Matrix<LaurentPoly> matCommutator = matE0() * conjForm * inverse2(matE0()) *
                                            inverse2(conjForm);
        CHECK(nu(commutatorRelation(k, 3, 3), 3) == ProjectiveClass(matCommutator));
        CHECK(nu(commutatorRelation(k, 3, 3), 3).isIdentity());
    }
}

TEST_CASE("rank-1 structure checks") {
    RelationReport r1 = checkA1mStructure(1, 50);
    CHECK(r1.holds);
    RelationReport r2 = checkA1mStructure(2, 100);
    CHECK(r2.holds);
    RelationReport r3 = checkA1mStructure(3, 100);
    CHECK(r3.holds);

    // explicit instance: AC4(1,1); AC4(1,2)^-1 acts non-identically
    Alphabet a12{1, 2};
    ACTransform t(a12);
    t.push(ElementaryMove{ElementaryMove::Kind::AC4, 1, 0, 1, Word(), false});
    t.push(ElementaryMove{ElementaryMove::Kind::AC4, 1, 0, 2, Word(), true});
    CHECK(!toEndo(t).isIdentity());
    CHECK(toEndo(t).image(xGen(1)) == parseWord("y1 y2^-1 x1 y2 y1^-1", a12));

    CHECK_THROWS_AS(checkA1mStructure(0, 10), std::invalid_argument);
}
