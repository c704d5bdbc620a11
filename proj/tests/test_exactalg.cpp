#include <doctest.h>

#include <stdexcept>

#include "twobridge/exactalg.hpp"

using tb::Int;
using tb::Laurent;
using tb::Rat;

TEST_SUITE("exactalg") {

TEST_CASE("make_rat reduces and keeps the denominator positive") {
    CHECK(tb::make_rat(Int(4), Int(6)) == Rat(2, 3));
    CHECK(tb::make_rat(Int(1), Int(-2)) == Rat(-1, 2));
    CHECK(tb::make_rat(Int(-3), Int(-9)) == Rat(1, 3));
    CHECK(tb::make_rat(Int(0), Int(5)) == 0);
    CHECK_THROWS_AS(tb::make_rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("integer helpers") {
    CHECK(tb::binomial(4, 3) == 4);
    CHECK(tb::binomial(12, 5) == 792);
    CHECK(tb::binomial(3, 5) == 0);
    CHECK(tb::pow_int(Int(-2), 3) == -8);
    CHECK(tb::pow_int(Int(7), 0) == 1);
}

TEST_CASE("Laurent ring operations") {
    const Laurent x(Int(1), 1);
    const Laurent xinv(Int(1), -1);
    const Laurent sum = x + xinv;

    SUBCASE("powers and products") {
        const Laurent sq = sum.pow(2);
        CHECK(sq.coeff(2) == 1);
        CHECK(sq.coeff(0) == 2);
        CHECK(sq.coeff(-2) == 1);
        CHECK(sq.term_count() == 3);
        CHECK(sum * sum == sq);
        CHECK(sum.pow(0) == Laurent(Int(1)));
    }

    SUBCASE("subtraction, negation, zero normalization") {
        Laurent z = sum - sum;
        CHECK(z.is_zero());
        CHECK((-sum).coeff(1) == -1);
        Laurent p = x;
        p.set_coeff(1, Int(0));
        CHECK(p.is_zero());
    }

    SUBCASE("min/max exponents") {
        CHECK(sum.min_exp() == -1);
        CHECK(sum.max_exp() == 1);
    }
}

TEST_CASE("Laurent derivative is termwise n*x^(n-1)") {
    Laurent p(Int(3), 4);
    p += Laurent(Int(1), -2);
    const Laurent d = p.derivative();
    CHECK(d.coeff(3) == 12);
    CHECK(d.coeff(-3) == -2);
    CHECK(d.term_count() == 2);
}

TEST_CASE("evaluations at +1 and -1 respect parity for negative exponents") {
    Laurent p(Int(2), -1);
    p += Laurent(Int(3), 2);
    CHECK(p.eval_at_one() == 5);
    CHECK(p.eval_at_minus_one() == 1);  // -2 + 3
    Laurent q(Int(1), -2);
    CHECK(q.eval_at_minus_one() == 1);
}

TEST_CASE("eval_even_square reads a polynomial in x^2") {
    // z^4 + 3 z^2 + 1 at z^2 = -4: 16 - 12 + 1 = 5.
    Laurent p(Int(1), 4);
    p += Laurent(Int(3), 2);
    p += Laurent(Int(1), 0);
    CHECK(p.eval_even_square(Int(-4)) == 5);
}

TEST_CASE("substitute composes polynomials") {
    // p(x) = x^2 + 1 at q = x - x^{-1}: x^2 - 1 + x^{-2}.
    Laurent p(Int(1), 2);
    p += Laurent(Int(1), 0);
    const Laurent q = Laurent(Int(1), 1) - Laurent(Int(1), -1);
    const Laurent r = p.substitute(q);
    CHECK(r.coeff(2) == 1);
    CHECK(r.coeff(0) == -1);
    CHECK(r.coeff(-2) == 1);
    CHECK(r.term_count() == 3);
}

TEST_CASE("divide_exact succeeds on exact factors and throws otherwise") {
    const Laurent x(Int(1), 1);
    const Laurent one(Int(1));
    const Laurent num = x.pow(2) - one;       // x^2 - 1
    const Laurent den = x - one;              // x - 1
    const Laurent quot = num.divide_exact(den);
    CHECK(quot == x + one);
    CHECK(quot * den == num);
    // Monomial division is always exact in the Laurent ring.
    CHECK(x.divide_exact(Laurent(Int(1), 3)) == Laurent(Int(1), -2));
    CHECK_THROWS_AS((x + one).divide_exact(x.pow(2) + one), std::domain_error);
}

TEST_CASE("to_string renders ascending exponents") {
    Laurent p(Int(1), 1);
    p += Laurent(Int(1), 3);
    p += Laurent(Int(-1), 4);
    CHECK(p.to_string("t") == "t + t^3 - t^4");
    Laurent q(Int(-2), -1);
    q += Laurent(Int(5), 0);
    CHECK(q.to_string("x") == "-2*x^-1 + 5");
    CHECK(Laurent().to_string("x") == "0");
}

}  // TEST_SUITE
