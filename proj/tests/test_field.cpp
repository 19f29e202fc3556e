#include <doctest.h>

#include "homtwist/field.hpp"

using namespace homtwist;

TEST_CASE("rationals are canonicalized: lowest terms, positive denominator") {
    Field q = Field::rationals();
    auto a = FieldScalar::ofRational(q, BigInt(2), BigInt(-4));
    CHECK(a.str() == "-1/2");
    auto b = FieldScalar::parse(q, "3/9");
    CHECK(b.str() == "1/3");
    auto [num, den] = a.numeratorDenominator();
    CHECK(num == "-1");
    CHECK(den == "2");
    CHECK(FieldScalar::parse(q, "-6/4") == FieldScalar::parse(q, "-3/2"));
}

TEST_CASE("field axioms hold exactly over Q") {
    Field q = Field::rationals();
    auto a = FieldScalar::parse(q, "7/12");
    CHECK((a + (-a)).isZero());
    CHECK((a * a.inverse()).isOne());
    auto b = FieldScalar::parse(q, "-5/3");
    CHECK((a + b) * (a - b) == a * a - b * b);
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(32003);
    auto a = FieldScalar::ofInt(f, -1);
    CHECK(a.residue() == 32002);
    auto b = FieldScalar::ofInt(f, 12345);
    CHECK((b * b.inverse()).isOne());
    CHECK((b + (-b)).isZero());
    // 1/2 maps to the residue r with 2r = 1
    auto half = FieldScalar::parse(f, "1/2");
    CHECK((half + half).isOne());
    CHECK_THROWS(Field::prime(32004));
    CHECK_THROWS(FieldScalar::parse(f, "1/32003"));
}

TEST_CASE("parse rejects malformed input and zero denominators") {
    Field q = Field::rationals();
    CHECK_THROWS(FieldScalar::parse(q, ""));
    CHECK_THROWS(FieldScalar::parse(q, "x"));
    CHECK_THROWS(FieldScalar::parse(q, "1/0"));
    CHECK_THROWS(FieldScalar::parse(q, "1/"));
    CHECK_THROWS(FieldScalar::parse(q, "2.5"));
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto a = FieldScalar::ofInt(Field::rationals(), 1);
    auto b = FieldScalar::ofInt(Field::prime(5), 1);
    CHECK_THROWS(a + b);
}
