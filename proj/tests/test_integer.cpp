#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acgroups/integer.hpp"

using acgroups::Integer;

TEST_CASE("small values round-trip through strings") {
    for (long long v : {0LL, 1LL, -1LL, 7LL, -42LL, 1000000000LL, -999999999999LL}) {
        Integer a(v);
        CHECK(a.toString() == std::to_string(v));
        CHECK(Integer::fromString(a.toString()) == a);
        CHECK(a.toInt64() == v);
    }
}

TEST_CASE("arithmetic agrees with int64 on sampled values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = dist(rng), b = dist(rng);
        CHECK((Integer(a) + Integer(b)).toInt64() == a + b);
        CHECK((Integer(a) - Integer(b)).toInt64() == a - b);
        CHECK((Integer(a) * Integer(b)).toInt64() == a * b);
        CHECK((Integer(a) < Integer(b)) == (a < b));
        CHECK((Integer(a) == Integer(b)) == (a == b));
    }
}

TEST_CASE("large values are exact") {
    Integer two(2);
    Integer p = Integer(1);
    for (int i = 0; i < 100; ++i) p *= two;
    CHECK(p.toString() == "1267650600228229401496703205376");  // 2^100
    CHECK((p - p).isZero());
    CHECK((p * Integer(-1)).toString() == "-1267650600228229401496703205376");

    Integer factorial(1);
    for (int i = 2; i <= 30; ++i) factorial *= Integer(i);
    CHECK(factorial.toString() == "265252859812191058636308480000000");  // 30!
    CHECK(Integer::fromString("265252859812191058636308480000000") == factorial);
}

TEST_CASE("ring laws on sampled triples") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> dist(-1000000000000LL, 1000000000000LL);
    for (int trial = 0; trial < 500; ++trial) {
        Integer a(dist(rng)), b(dist(rng)), c(dist(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Integer(0) == a);
        CHECK(a * Integer(1) == a);
        CHECK((a + (-a)).isZero());
    }
}

TEST_CASE("LLONG_MIN magnitude is handled") {
    long long lowest = std::numeric_limits<long long>::min();
    Integer a(lowest);
    CHECK(a.toString() == std::to_string(lowest));
    CHECK(a.toInt64() == lowest);
}
