#pragma once

#include <string>

#include "rinv/laurent.hpp"

namespace rinv {

// Exact value of a rational specialization: either a rational number or the
// point at infinity (denominator vanished while the numerator did not).
struct SpecialValue {
    bool infinite = false;
    Rat value{0};

    static SpecialValue inf() { return SpecialValue{true, Rat(0)}; }
    static SpecialValue finite(const Rat& v) { return SpecialValue{false, v}; }

    bool operator==(const SpecialValue& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const SpecialValue& o) const { return !(*this == o); }

    // "inf", or the rational as "p/q" ("p" when q = 1).
    std::string to_string() const;
};

// Rational function  num / ((x+1)^a (x+2)^b)  with an ordinary (nonnegative
// exponent) polynomial numerator.  Canonical form: num shares no factor of
// (x+1) while a > 0 and none of (x+2) while b > 0; the zero value is
// (0, 0, 0).  Equality of canonical values is structural.
struct LambdaRational {
    Laurent num;
    int den_pow1 = 0;  // exponent a on (x+1)
    int den_pow2 = 0;  // exponent b on (x+2)

    bool operator==(const LambdaRational& o) const {
        return num == o.num && den_pow1 == o.den_pow1 && den_pow2 == o.den_pow2;
    }
    bool operator!=(const LambdaRational& o) const { return !(*this == o); }

    bool is_polynomial() const { return den_pow1 == 0 && den_pow2 == 0; }

    // Canonical text: the numerator string alone when the denominator is 1,
    // otherwise "num / ((L+1)^a*(L+2)^b)" with unit factors omitted.
    std::string to_string(const std::string& var) const;
};

// Exact division of p by (x + r) when it divides evenly (synthetic division);
// returns false when there is a remainder.  Requires p with exponents >= 0.
bool divide_by_linear(const Laurent& p, long r, Laurent& quotient);

// Brings num / ((x+1)^a (x+2)^b) to canonical form by repeated exact
// division.  Throws DomainError on negative powers or a numerator with
// negative exponents.
LambdaRational rational_reduce(const Laurent& num, int pow1, int pow2);

// Exact evaluation at a rational point; infinity when the denominator
// vanishes there.  Canonical inputs have no removable singularities, so a
// vanishing denominator really is a pole.
SpecialValue rational_evaluate(const LambdaRational& f, const Rat& x);

}  // namespace rinv
