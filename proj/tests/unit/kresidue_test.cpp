#include "doctest.h"

#include "isotower/kresidue.hpp"
#include "isotower/sampling.hpp"

using namespace isotower::kresidue;
namespace sampling = isotower::sampling;

namespace {

const AbelianGroupSpec c2{{2}, 0};
const Representation c2_trivial{c2, {{0}}};
const Representation c2_sign{c2, {{1}}};
const Representation c2_both{c2, {{0}, {1}}};

RepRingElem x_char() { return RepRingElem::character(c2, {1}); }

} // namespace

TEST_CASE("rep ring arithmetic") {
    // cyclic exponents reduce mod the order: x * x = 1 over C_2
    CHECK((x_char() * x_char()).is_one());
    CHECK((x_char() - x_char()).is_zero());
    RepRingElem e = RepRingElem::one(c2) + x_char();
    CHECK(e.pretty() == "1 + x");
    CHECK((RepRingElem::one(c2) - x_char()).pretty() == "1 - x");
    CHECK(e.scaled(0).is_zero());

    // torus exponents are unbounded
    AbelianGroupSpec t1{{}, 1};
    RepRingElem u = RepRingElem::character(t1, {-2});
    CHECK((u * u).terms().begin()->first == Character{-4});

    AbelianGroupSpec bad{{0}, 0};
    CHECK_THROWS_AS(RepRingElem::one(bad), std::invalid_argument);
}

TEST_CASE("exterior powers") {
    auto es = exterior_powers(c2_both);
    REQUIRE(es.size() == 3);
    CHECK(es[0].is_one());
    CHECK(es[1] == RepRingElem::one(c2) + x_char());
    CHECK(es[2] == x_char());

    // lambda^2 of a two-line representation is the product character
    AbelianGroupSpec t2{{}, 2};
    Representation v{t2, {{1, 0}, {0, 1}}};
    auto et = exterior_powers(v);
    CHECK(et[2] == RepRingElem::character(t2, {1, 1}));
}

TEST_CASE("k polynomial") {
    CHECK(k_polynomial(Representation{c2, {}}) == KPolynomial::one(c2));
    KPolynomial f = k_polynomial(c2_both);
    CHECK(f.degree() == 2);
    CHECK(f.is_monic());
    CHECK(f.coeff(1) == -(RepRingElem::one(c2) + x_char()));
    CHECK(f.coeff(0) == x_char());
    CHECK(f.pretty() == "z^2 - (1 + x)*z + x");

    // trivial^d gives (z-1)^d
    Representation triv3{c2, {{0}, {0}, {0}}};
    KPolynomial zm1(c2, {RepRingElem::constant(c2, -1), RepRingElem::one(c2)});
    CHECK(k_polynomial(triv3) == zm1 * zm1 * zm1);
}

TEST_CASE("residue") {
    KPolynomial f = k_polynomial(c2_both);  // (z-1)(z-x)
    auto z_pow = [&](int i) { return KPolynomial::monomial(c2, RepRingElem::one(c2), i); };
    CHECK(residue(z_pow(0), f).is_zero());
    CHECK(residue(z_pow(1), f).is_one());
    // z^2 mod f = (1+x)z - x
    CHECK(residue(z_pow(2), f) == RepRingElem::one(c2) + x_char());
    // res(g f / f) = 0 for polynomial g
    KPolynomial g = z_pow(3) + KPolynomial::monomial(c2, x_char(), 1);
    CHECK(residue(g * f, f).is_zero());
    CHECK_THROWS_AS(residue(g, KPolynomial::monomial(c2, x_char(), 2)), std::invalid_argument);
}

TEST_CASE("gysin values") {
    auto r1 = gysin_values(c2_trivial);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].is_one());

    sampling::Rng rng(31);
    auto g = sampling::random_group(rng, 2, 7, 1);
    auto v = sampling::random_representation(rng, g, 3);
    auto r = gysin_values(v);
    CHECK(r[0].is_zero());
    CHECK(r[1].is_zero());
    CHECK(r[2].is_one());
    CHECK(normalization_identity_holds(v));
}

TEST_CASE("diagonal class") {
    auto e1 = diagonal_class(c2_trivial);
    CHECK(e1.coeffs[0][0].is_one());

    auto e = diagonal_class(c2_both);  // z + w - (1+x)
    CHECK(e.coeffs[0][0] == -(RepRingElem::one(c2) + x_char()));
    CHECK(e.coeffs[1][0].is_one());
    CHECK(e.coeffs[0][1].is_one());
    CHECK_THROWS_AS(diagonal_class(Representation{c2, {}}), std::invalid_argument);
}

TEST_CASE("divisibility") {
    KPolynomial f = k_polynomial(c2_both);
    auto self = divides(f, f);
    CHECK(self.divides);
    CHECK(self.quotient == KPolynomial::one(c2));

    CHECK_FALSE(divides(k_polynomial(c2_trivial), k_polynomial(c2_sign)).divides);

    // product factorization: f_{V0} | f_{V0 + V2} with quotient f_{V2}
    Representation v2{c2, {{1}, {1}}};
    Representation sum{c2, {{0}, {1}, {1}, {1}}};
    auto d = divides(k_polynomial(c2_both), k_polynomial(sum));
    CHECK(d.divides);
    CHECK(d.quotient == k_polynomial(v2));
}

TEST_CASE("obstruction check") {
    auto v = obstruction_check(c2_trivial, c2_sign);
    CHECK_FALSE(v.divides);
    CHECK_FALSE(v.subrepresentation);
    REQUIRE(v.residues.size() == 1);
    CHECK(v.residues[0] == RepRingElem::one(c2) - x_char());
    CHECK(v.residues[0].pretty() == "1 - x");

    auto w = obstruction_check(c2_trivial, c2_both);
    CHECK(w.divides);
    CHECK(w.subrepresentation);
    CHECK(w.residues[0].is_zero());

    auto u = obstruction_check(c2_both, c2_both);
    CHECK(u.divides);
    CHECK(u.subrepresentation);

    CHECK_THROWS_AS(obstruction_check(c2_both, c2_trivial), std::invalid_argument);
}

TEST_CASE("divides matches multiset inclusion over small cyclic groups") {
    // spot re-check of the exhaustive selftest invariant on C_4
    AbelianGroupSpec c4{{4}, 0};
    std::vector<Representation> reps;
    for (long long a = 0; a < 4; ++a)
        for (long long b = a; b < 4; ++b)
            reps.push_back(Representation{c4, {{a}, {b}}});
    for (const auto& v0 : reps)
        for (const auto& v1 : reps)
            CHECK(divides(k_polynomial(v0), k_polynomial(v1)).divides ==
                  submultiset(v0, v1));
}
