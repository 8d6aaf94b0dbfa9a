#include "rinv/rational.hpp"

#include <sstream>

namespace rinv {

std::string SpecialValue::to_string() const {
    if (infinite) return "inf";
    std::ostringstream out;
    out << value;
    return out.str();
}

std::string LambdaRational::to_string(const std::string& var) const {
    std::string n = num.to_string(var);
    if (is_polynomial()) return n;
    std::ostringstream out;
    out << n << " / (";
    bool need_star = false;
    if (den_pow1 > 0) {
        out << '(' << var << "+1)";
        if (den_pow1 > 1) out << '^' << den_pow1;
        need_star = true;
    }
    if (den_pow2 > 0) {
        if (need_star) out << '*';
        out << '(' << var << "+2)";
        if (den_pow2 > 1) out << '^' << den_pow2;
    }
    out << ')';
    return out.str();
}

bool divide_by_linear(const Laurent& p, long r, Laurent& quotient) {
    if (p.is_zero()) {
        quotient = Laurent();
        return true;
    }
    if (p.min_exp() < 0)
        throw DomainError("divide_by_linear requires nonnegative exponents");
    const int deg = p.max_exp();
    if (deg == 0) return false;  // nonzero constant, (x+r) cannot divide
    // Synthetic division by (x + r): process coefficients from the top.
    std::vector<Int> q(static_cast<size_t>(deg), Int(0));
    Int carry = p.coeff(deg);
    for (int e = deg - 1; e >= 0; --e) {
        q[static_cast<size_t>(e)] = carry;
        carry = p.coeff(e) - Int(r) * carry;
    }
    if (carry != 0) return false;  // remainder
    Laurent result;
    for (int e = 0; e < deg; ++e) result.set_coeff(e, q[static_cast<size_t>(e)]);
    quotient = result;
    return true;
}

LambdaRational rational_reduce(const Laurent& num, int pow1, int pow2) {
    if (pow1 < 0 || pow2 < 0)
        throw DomainError("rational_reduce requires nonnegative denominator powers");
    if (!num.is_zero() && num.min_exp() < 0)
        throw DomainError("rational_reduce requires a plain polynomial numerator");
    if (num.is_zero()) return LambdaRational{Laurent(), 0, 0};
    LambdaRational f{num, pow1, pow2};
    Laurent q;
    while (f.den_pow1 > 0 && divide_by_linear(f.num, 1, q)) {
        f.num = q;
        --f.den_pow1;
    }
    while (f.den_pow2 > 0 && divide_by_linear(f.num, 2, q)) {
        f.num = q;
        --f.den_pow2;
    }
    return f;
}

SpecialValue rational_evaluate(const LambdaRational& f, const Rat& x) {
    Rat den(1);
    if (f.den_pow1 > 0) {
        Rat base = x + 1;
        for (int i = 0; i < f.den_pow1; ++i) den *= base;
    }
    if (f.den_pow2 > 0) {
        Rat base = x + 2;
        for (int i = 0; i < f.den_pow2; ++i) den *= base;
    }
    if (den == 0) return SpecialValue::inf();
    return SpecialValue::finite(f.num.evaluate(x) / den);
}

}  // namespace rinv
