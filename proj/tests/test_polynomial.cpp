#include <doctest.h>

#include <limits>
#include <random>

#include "schurkit/errors.hpp"
#include "schurkit/polynomial.hpp"

using namespace schurkit;

TEST_CASE("ring operations") {
    auto x1 = MonomialPolynomial::variable(2, 1);
    auto x2 = MonomialPolynomial::variable(2, 2);

    CHECK(x1 * x2 == MonomialPolynomial::monomial(2, {1, 1}));
    CHECK((x1 + poly_scale(x1, -1)).is_zero());

    auto sq = (x1 + x2) * (x1 + x2);
    CHECK(sq.terms().size() == 3);
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({0, 2}) == 1);
    CHECK(sq.homogeneous_degree() == 2);
    CHECK(sq.coefficient_mass() == 4);

    CHECK(poly_scale(sq, 0).is_zero());
    CHECK((sq - sq).is_zero());
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(MonomialPolynomial(0), ArityMismatch);
    CHECK_THROWS_AS(MonomialPolynomial::variable(2, 1) + MonomialPolynomial::variable(3, 1), ArityMismatch);
    CHECK_THROWS_AS(MonomialPolynomial::variable(2, 1) * MonomialPolynomial::variable(3, 1), ArityMismatch);
    CHECK_THROWS_AS(MonomialPolynomial::variable(2, 3), ArityMismatch);
    MonomialPolynomial p(2);
    CHECK_THROWS_AS(p.add_term({1}, 1), ArityMismatch);
    CHECK_THROWS_AS(p.add_term({-1, 0}, 1), EntryOutOfRange);

    auto big = MonomialPolynomial::monomial(1, {0}, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(poly_scale(big, 2), OverflowError);
}

TEST_CASE("homogeneity") {
    auto x1 = MonomialPolynomial::variable(2, 1);
    auto mixed = x1 + x1 * x1;
    CHECK_FALSE(mixed.homogeneous_degree().has_value());
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(MonomialPolynomial(2).is_homogeneous());
    CHECK_FALSE(MonomialPolynomial(2).homogeneous_degree().has_value());
}

TEST_CASE("text format") {
    MonomialPolynomial p(3);
    p.add_term({2, 1, 0}, 1);
    p.add_term({1, 1, 1}, 2);
    p.add_term({0, 0, 0}, -3);
    CHECK(to_string(p) == "1 * x1^2 x2\n2 * x1 x2 x3\n-3 * 1\n");
    CHECK(to_string(MonomialPolynomial(2)) == "0\n");
    CHECK(parse_polynomial(to_string(p), 3) == p);
    CHECK(parse_polynomial(to_string(p)) == p);
    CHECK(parse_polynomial("0\n", 2) == MonomialPolynomial(2));
    CHECK(parse_polynomial("1 * x2 x2\n", 2).coefficient({0, 2}) == 1);
    CHECK_THROWS_AS(parse_polynomial("x1\n"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1 * y1\n"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1 * x4\n", 3), ArityMismatch);
}

TEST_CASE("text format round-trips on random polynomials") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> nv(1, 5), exp(0, 4), terms(0, 12);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        int n = nv(rng);
        MonomialPolynomial p(n);
        for (int t = terms(rng); t > 0; --t) {
            Exponents e(static_cast<std::size_t>(n));
            for (auto& x : e)
                x = exp(rng);
            p.add_term(e, coeff(rng));
        }
        CHECK(parse_polynomial(to_string(p), n) == p);
    }
}
