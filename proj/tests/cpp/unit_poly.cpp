#include "doctest.h"

#include "rinv/laurent.hpp"
#include "rinv/rational.hpp"
#include "rinv/rng.hpp"

using namespace rinv;

namespace {

Laurent lam() { return lp_monomial(1, 1); }

// Convenience: polynomial from ascending coefficients c0 + c1 x + c2 x^2 ...
Laurent poly(std::initializer_list<long> coeffs) {
    Laurent p;
    int e = 0;
    for (long c : coeffs) p.set_coeff(e++, Int(c));
    return p;
}

}  // namespace

TEST_CASE("laurent text form") {
    CHECK(lp_constant(0).to_string("L") == "0");
    CHECK(lp_constant(7).to_string("L") == "7");
    CHECK(lp_constant(-1).to_string("L") == "-1");
    CHECK((lam() + lp_constant(2)).to_string("L") == "L+2");
    CHECK(lp_monomial(-1, 1).to_string("L") == "-L");
    CHECK(lp_monomial(3, 1).to_string("L") == "3*L");
    CHECK(lp_monomial(1, -2).to_string("A") == "A^-2");
    Laurent p = lp_monomial(-1, 3) + lp_monomial(2, 2) + lp_constant(2);
    CHECK(p.to_string("L") == "-L^3+2*L^2+2");
}

TEST_CASE("laurent arithmetic") {
    Laurent f = lp_monomial(1, 2) + lp_monomial(1, -2);
    Laurent sq = f * f;
    CHECK(sq == lp_monomial(1, 4) + lp_constant(2) + lp_monomial(1, -4));
    CHECK((f - f).is_zero());
    CHECK((-f) + f == Laurent());
    Laurent g = f;
    g += f;
    CHECK(g == lp_monomial(2, 2) + lp_monomial(2, -2));
    g *= lp_constant(0);
    CHECK(g.is_zero());

    // No zero terms survive cancellation, so equality is structural.
    Laurent h = (lam() + lp_constant(1)) * (lam() - lp_constant(1));
    CHECK(h == lp_monomial(1, 2) - lp_constant(1));
    CHECK(h.coeff(1) == 0);
    CHECK(h.terms().size() == 2);
}

TEST_CASE("laurent accessors and exponent maps") {
    Laurent p = lp_monomial(5, 3) + lp_monomial(-2, -1);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 3);
    CHECK(p.coeff(3) == 5);
    CHECK(p.coeff(0) == 0);
    CHECK_THROWS_AS(Laurent().min_exp(), DomainError);

    p.set_coeff(3, Int(0));
    CHECK(p.max_exp() == -1);

    Laurent f = lp_monomial(1, 4) + lp_monomial(2, 0) + lp_monomial(1, -4);
    CHECK(f.is_symmetric());
    CHECK(f.exponents_divisible_by(4));
    CHECK(f.exponents_divisible_by(2));
    CHECK(f.deflate_exponents(4) == lp_monomial(1, 1) + lp_constant(2) + lp_monomial(1, -1));
    CHECK(f.deflate_exponents(4).inflate_exponents(4) == f);
    CHECK_THROWS_AS(f.deflate_exponents(3), DomainError);

    Laurent g = lp_monomial(1, 2) + lp_monomial(3, -1);
    CHECK(g.invert_variable() == lp_monomial(1, -2) + lp_monomial(3, 1));
    CHECK(!g.is_symmetric());
}

TEST_CASE("laurent evaluation") {
    Laurent p = poly({5, -1, 0, 2});  // 2x^3 - x + 5
    CHECK(p.evaluate(Rat(1, 2)) == Rat(19, 4));
    CHECK(p.evaluate(Rat(0)) == Rat(5));
    CHECK(p.evaluate(Rat(-1)) == Rat(4));

    Laurent q = lp_monomial(1, 1) + lp_monomial(1, -1);
    CHECK(q.evaluate(Rat(2)) == Rat(5, 2));
    CHECK(q.evaluate(Rat(-2, 3)) == Rat(-13, 6));
    CHECK_THROWS_AS(q.evaluate(Rat(0)), DomainError);
    CHECK(Laurent().evaluate(Rat(0)) == Rat(0));

    // Gaps between negative exponents exercise the low-side Horner steps.
    Laurent r = lp_monomial(1, -3) + lp_monomial(1, -1) + lp_monomial(2, 0);
    CHECK(r.evaluate(Rat(2)) == Rat(21, 8));
    Laurent s = lp_monomial(3, -4) + lp_monomial(-2, -2) + lp_monomial(1, 2);
    CHECK(s.evaluate(Rat(2)) == Rat(59, 16));
}

TEST_CASE("chebyshev basis change: pinned examples") {
    auto pair = [](int k) { return lp_monomial(1, k) + lp_monomial(1, -k); };

    CHECK(chebyshev_to_lambda(Laurent()) == Laurent());
    CHECK(chebyshev_to_lambda(lp_constant(5)) == lp_constant(5));
    CHECK(chebyshev_to_lambda(pair(1)) == lam());
    CHECK(chebyshev_to_lambda(pair(2)) == lp_monomial(1, 2) - lp_constant(2));
    CHECK(chebyshev_to_lambda(pair(3)) == lp_monomial(1, 3) - lp_monomial(3, 1));

    // mu^3 + 2mu^2 + 3mu + 4 + 3/mu + 2/mu^2 + 1/mu^3  ->  L^3 + 2L^2
    Laurent f = pair(3) + lp_constant(2) * pair(2) + lp_constant(3) * pair(1) +
                lp_constant(4);
    CHECK(chebyshev_to_lambda(f).to_string("L") == "L^3+2*L^2");

    CHECK_THROWS_AS(chebyshev_to_lambda(lp_monomial(1, 1)), DomainError);
}

TEST_CASE("chebyshev basis change: evaluation property on random inputs") {
    // If g = chebyshev_to_lambda(f) then f(m) == g(m + 1/m) for every m != 0.
    Rng rng(20260816);
    const Rat m0(3, 2);
    const Rat l0 = m0 + Rat(1) / m0;
    for (int trial = 0; trial < 200; ++trial) {
        Laurent f;
        int top = 1 + static_cast<int>(rng.below(7));
        for (int k = 0; k <= top; ++k) {
            long c = static_cast<long>(rng.below(11)) - 5;
            if (c == 0) continue;
            f += Laurent::term(Int(c), k);
            if (k > 0) f += Laurent::term(Int(c), -k);
        }
        Laurent g = chebyshev_to_lambda(f);
        CHECK(f.evaluate(m0) == g.evaluate(l0));
    }
}

TEST_CASE("exact division by a linear factor") {
    Laurent prod = (lam() + lp_constant(1)) * (lam() + lp_constant(2));
    Laurent q;
    REQUIRE(divide_by_linear(prod, 1, q));
    CHECK(q == lam() + lp_constant(2));
    REQUIRE(divide_by_linear(prod, 2, q));
    CHECK(q == lam() + lp_constant(1));
    CHECK(!divide_by_linear(prod, 3, q));
    CHECK(!divide_by_linear(lp_constant(7), 1, q));
    REQUIRE(divide_by_linear(Laurent(), 1, q));
    CHECK(q.is_zero());
    CHECK_THROWS_AS(divide_by_linear(lp_monomial(1, -1), 1, q), DomainError);
}

TEST_CASE("rational reduction to canonical form") {
    Laurent l1 = lam() + lp_constant(1);
    Laurent l2 = lam() + lp_constant(2);

    LambdaRational r = rational_reduce(l2 * l2 * l1, 1, 1);
    CHECK(r.num == l2);
    CHECK(r.den_pow1 == 0);
    CHECK(r.den_pow2 == 0);
    CHECK(r.is_polynomial());

    // 3L^2 + 6L + 4 shares no root with L+1 or L+2.
    Laurent g = poly({4, 6, 3});
    LambdaRational rg = rational_reduce(g, 2, 1);
    CHECK(rg.num == g);
    CHECK(rg.den_pow1 == 2);
    CHECK(rg.den_pow2 == 1);

    LambdaRational z = rational_reduce(Laurent(), 3, 2);
    CHECK(z.num.is_zero());
    CHECK(z.den_pow1 == 0);
    CHECK(z.den_pow2 == 0);

    CHECK_THROWS_AS(rational_reduce(lam(), -1, 0), DomainError);
    CHECK_THROWS_AS(rational_reduce(lp_monomial(1, -1), 0, 0), DomainError);

    // Idempotence: reducing a canonical value changes nothing.
    LambdaRational again = rational_reduce(rg.num, rg.den_pow1, rg.den_pow2);
    CHECK(again == rg);
}

TEST_CASE("rational evaluation and poles") {
    LambdaRational d{lam() + lp_constant(2), 1, 0};  // (L+2)/(L+1)
    CHECK(rational_evaluate(d, Rat(2)) == SpecialValue::finite(Rat(4, 3)));
    CHECK(rational_evaluate(d, Rat(1)) == SpecialValue::finite(Rat(3, 2)));
    CHECK(rational_evaluate(d, Rat(-1)).infinite);

    LambdaRational g{poly({4, 6, 3}), 2, 1};  // (3L^2+6L+4)/((L+1)^2 (L+2))
    CHECK(rational_evaluate(g, Rat(2)) == SpecialValue::finite(Rat(7, 9)));
    CHECK(rational_evaluate(g, Rat(1)) == SpecialValue::finite(Rat(13, 12)));
    CHECK(rational_evaluate(g, Rat(-1)).infinite);
    CHECK(rational_evaluate(g, Rat(-2)).infinite);

    CHECK(SpecialValue::finite(Rat(4, 3)).to_string() == "4/3");
    CHECK(SpecialValue::finite(Rat(16)).to_string() == "16");
    CHECK(SpecialValue::inf().to_string() == "inf");
}

TEST_CASE("rational text form") {
    Laurent l2 = lam() + lp_constant(2);
    CHECK(LambdaRational{l2, 0, 0}.to_string("L") == "L+2");
    CHECK(LambdaRational{l2, 1, 0}.to_string("L") == "L+2 / ((L+1))");
    CHECK(LambdaRational{poly({4, 6, 3}), 2, 1}.to_string("L") ==
          "3*L^2+6*L+4 / ((L+1)^2*(L+2))");
    CHECK(LambdaRational{lp_constant(1), 0, 2}.to_string("L") == "1 / ((L+2)^2)");
}
