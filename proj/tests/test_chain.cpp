#include <doctest.h>

#include "homtwist/chain.hpp"

using namespace homtwist;

namespace {

// 0 -> k (deg -1) --(1,-1)--> k^2 (deg 0) -> 0
ChainComplex intervalSquareComplex(const Field& q) {
    ChainComplex c(q);
    c.setDim(-1, 1);
    c.setDim(0, 2);
    SparseMatrix d(2, 1, q);
    d.set(0, 0, FieldScalar::ofInt(q, 1));
    d.set(1, 0, FieldScalar::ofInt(q, -1));
    c.setDifferential(-1, d);
    return c;
}

}  // namespace

TEST_CASE("cohomology of the two-candidate complex") {
    Field q = Field::rationals();
    auto c = intervalSquareComplex(q);
    auto h = c.cohomology();
    CHECK(h.dims.count(-1) == 0);
    REQUIRE(h.dims.count(0) == 1);
    CHECK(h.dims.at(0) == 1);
    CHECK(c.eulerCharacteristic() == 1);
}

TEST_CASE("cohomology of the zero complex and an acyclic two-term complex") {
    Field q = Field::rationals();
    ChainComplex zero(q);
    CHECK(zero.cohomology().dims.empty());

    ChainComplex acyclic(q);
    acyclic.setDim(0, 1);
    acyclic.setDim(1, 1);
    acyclic.setDifferential(0, SparseMatrix::identity(1, q));
    CHECK(acyclic.cohomology().dims.empty());
    CHECK(acyclic.eulerCharacteristic() == 0);
}

TEST_CASE("complexes failing d^2 = 0 are rejected") {
    Field q = Field::rationals();
    ChainComplex c(q);
    c.setDim(0, 1);
    c.setDim(1, 1);
    c.setDim(2, 1);
    c.setDifferential(0, SparseMatrix::identity(1, q));
    c.setDifferential(1, SparseMatrix::identity(1, q));
    REQUIRE(c.dSquaredViolation().has_value());
    CHECK(c.dSquaredViolation().value() == 0);
    CHECK_THROWS_AS(c.cohomology(), std::invalid_argument);
}

TEST_CASE("Euler characteristic equals alternating sum of cohomology dims") {
    Field q = Field::rationals();
    // k (deg -2) --id--> k (deg -1) --0--> k^2 (deg 0)
    ChainComplex c(q);
    c.setDim(-2, 1);
    c.setDim(-1, 1);
    c.setDim(0, 2);
    c.setDifferential(-2, SparseMatrix::identity(1, q));
    auto h = c.cohomology();
    long long chiH = 0;
    for (const auto& [d, n] : h.dims) chiH += (d % 2 == 0) ? n : -n;
    CHECK(c.eulerCharacteristic() == chiH);
    CHECK(chiH == 2);
}

TEST_CASE("cohomology representatives are cocycles independent modulo the image") {
    Field q = Field::rationals();
    auto c = intervalSquareComplex(q);
    auto h = c.cohomology();
    for (const auto& [deg, reps] : h.representatives) {
        auto d = c.differential(deg);
        for (const auto& r : reps) CHECK(d.apply(r).isZero());
    }
}

TEST_CASE("chain map commutation and induced maps") {
    Field q = Field::rationals();
    auto c = intervalSquareComplex(q);

    SUBCASE("identity is a quasi-isomorphism") {
        ChainMap f(c, c);
        f.setComponent(-1, SparseMatrix::identity(1, q));
        f.setComponent(0, SparseMatrix::identity(2, q));
        CHECK_FALSE(f.commutationViolation().has_value());
        auto ind = f.inducedOnCohomology();
        CHECK(ind.isQuasiIso);
        CHECK(ind.onCohomology.at(0).at(0, 0).isOne());
    }

    SUBCASE("zero map between acyclic complexes is a quasi-isomorphism") {
        ChainComplex a(q);
        a.setDim(0, 1);
        a.setDim(1, 1);
        a.setDifferential(0, SparseMatrix::identity(1, q));
        ChainMap f(a, a);  // zero components
        auto ind = f.inducedOnCohomology();
        CHECK(ind.isQuasiIso);
    }

    SUBCASE("non-chain-maps are rejected with the violating degree") {
        ChainMap f(c, c);
        SparseMatrix swap(2, 2, q);
        swap.set(0, 1, FieldScalar::ofInt(q, 1));
        swap.set(1, 0, FieldScalar::ofInt(q, 1));
        f.setComponent(0, swap);
        // deg -1 component is zero, so d * f != f * d at degree -1
        REQUIRE(f.commutationViolation().has_value());
        CHECK_THROWS_AS(f.inducedOnCohomology(), std::invalid_argument);
    }

    SUBCASE("a non-invertible induced map is not a quasi-isomorphism") {
        ChainMap f(c, c);  // zero map; H^0 is 1-dimensional on both sides
        auto ind = f.inducedOnCohomology();
        CHECK_FALSE(ind.isQuasiIso);
    }
}
