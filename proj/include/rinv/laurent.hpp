#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rinv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an operation is called outside its domain (evaluating x^-1 at
// x = 0, converting an asymmetric polynomial, ...).  Distinct from bad user
// input, which surfaces as ParseError from the diagram layer.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Laurent polynomial in one variable with exact integer coefficients.
// Invariant: the map holds no zero coefficients, so equality is structural.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Int& constant);
    explicit Laurent(long constant);

    // x^e with coefficient c.
    static Laurent term(const Int& coeff, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(int exp) const;       // 0 if absent
    int min_exp() const;                   // requires nonzero
    int max_exp() const;                   // requires nonzero
    const std::map<int, Int>& terms() const { return coeffs_; }

    void set_coeff(int exp, const Int& c); // erases on zero

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }

    // Substitute x -> x^-1 (negate every exponent).
    Laurent invert_variable() const;

    // True when invariant under x -> x^-1.
    bool is_symmetric() const { return *this == invert_variable(); }

    // True when every exponent is divisible by m.
    bool exponents_divisible_by(int m) const;

    // Substitute x -> x^m, m > 0 (multiply every exponent).
    Laurent inflate_exponents(int m) const;

    // Substitute x^m -> x where every exponent is divisible by m.
    Laurent deflate_exponents(int m) const;

    // Exact evaluation at a rational point.  Throws DomainError when x = 0
    // and a negative exponent is present.
    Rat evaluate(const Rat& x) const;

    // Canonical text form: terms in descending exponent order, e.g.
    // "-L^3+2*L^2+2" for variable name "L".  Zero renders as "0".
    std::string to_string(const std::string& var) const;

private:
    std::map<int, Int> coeffs_;
};

// Monomials and constants used all over the calculator.
Laurent lp_constant(long c);
Laurent lp_monomial(long coeff, int exp);

// Converts a symmetric Laurent polynomial f(mu) into the polynomial g with
// f(mu) = g(lambda) under lambda = mu + mu^-1: each pair mu^k + mu^-k
// (k >= 1) becomes q_k, where q_0 = 2, q_1 = lambda, and
// q_{k+1} = lambda*q_k - q_{k-1}; the constant term passes through.
// Throws DomainError when the input is not symmetric.
Laurent chebyshev_to_lambda(const Laurent& symmetric_in_mu);

}  // namespace rinv
