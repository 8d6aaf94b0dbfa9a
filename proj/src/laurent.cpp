#include "rinv/laurent.hpp"

#include <sstream>

namespace rinv {

Laurent::Laurent(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

Laurent::Laurent(long constant) {
    if (constant != 0) coeffs_[0] = Int(constant);
}

Laurent Laurent::term(const Int& coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

const Int& Laurent::coeff(int exp) const {
    static const Int zero{0};
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? zero : it->second;
}

int Laurent::min_exp() const {
    if (coeffs_.empty()) throw DomainError("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int Laurent::max_exp() const {
    if (coeffs_.empty()) throw DomainError("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

void Laurent::set_coeff(int exp, const Int& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(e1 + e2, c1 * c2);
            } else {
                it->second += c1 * c2;
            }
        }
    }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();) {
        if (it->second == 0)
            it = r.coeffs_.erase(it);
        else
            ++it;
    }
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::invert_variable() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

bool Laurent::exponents_divisible_by(int m) const {
    for (const auto& [e, c] : coeffs_) {
        (void)c;
        if (e % m != 0) return false;
    }
    return true;
}

Laurent Laurent::inflate_exponents(int m) const {
    if (m <= 0) throw DomainError("inflate_exponents requires m > 0");
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * m] = c;
    return r;
}

Laurent Laurent::deflate_exponents(int m) const {
    if (m <= 0) throw DomainError("deflate_exponents requires m > 0");
    Laurent r;
    for (const auto& [e, c] : coeffs_) {
        if (e % m != 0)
            throw DomainError("deflate_exponents: exponent not divisible by " +
                              std::to_string(m));
        r.coeffs_[e / m] = c;
    }
    return r;
}

Rat Laurent::evaluate(const Rat& x) const {
    if (coeffs_.empty()) return Rat(0);
    if (x == 0) {
        if (coeffs_.begin()->first < 0)
            throw DomainError("evaluation at 0 with negative exponents");
        return Rat(coeff(0));
    }
    // Split into nonnegative and negative parts; Horner each side.
    Rat result(0);
    // Descending over nonnegative exponents.
    int prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (it->first < 0) break;
        if (prev_exp < 0) {
            result = Rat(it->second);
        } else {
            for (int k = it->first; k < prev_exp; ++k) result *= x;
            result += Rat(it->second);
        }
        prev_exp = it->first;
    }
    if (prev_exp > 0)
        for (int k = 0; k < prev_exp; ++k) result *= x;
    // Ascending over negative exponents with the inverse point.
    Rat xi = Rat(1) / x;
    Rat neg(0);
    int prev_neg = 0;
    for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
        if (it->first >= 0) break;
        if (prev_neg == 0) {
            neg = Rat(it->second);
        } else {
            for (int k = prev_neg; k < it->first; ++k) neg *= xi;
            neg += Rat(it->second);
        }
        prev_neg = it->first;
    }
    if (prev_neg < 0) {
        for (int k = prev_neg; k < 0; ++k) neg *= xi;
        result += neg;
    }
    return result;
}

std::string Laurent::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        Int c = it->second;
        if (c < 0) {
            out << '-';
            c = -c;
        } else if (!first) {
            out << '+';
        }
        first = false;
        const bool unit = (c == 1);
        if (e == 0) {
            out << c;
        } else {
            if (!unit) out << c << '*';
            out << var;
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

Laurent lp_constant(long c) { return Laurent(c); }

Laurent lp_monomial(long coeff, int exp) { return Laurent::term(Int(coeff), exp); }

Laurent chebyshev_to_lambda(const Laurent& f) {
    if (!f.is_symmetric())
        throw DomainError("chebyshev_to_lambda requires a symmetric polynomial");
    if (f.is_zero()) return Laurent();
    const int n = f.max_exp();
    // q_k(lambda) with q_0 = 2, q_1 = lambda, q_{k+1} = lambda q_k - q_{k-1},
    // so that mu^k + mu^-k = q_k(lambda) under lambda = mu + mu^-1; the
    // constant term of f is not part of a mu^k + mu^-k pair and passes
    // through unchanged.
    std::vector<Laurent> p;
    p.reserve(n + 1);
    p.push_back(lp_constant(2));
    if (n >= 1) p.push_back(lp_monomial(1, 1));
    const Laurent lambda = lp_monomial(1, 1);
    for (int k = 2; k <= n; ++k) p.push_back(lambda * p[k - 1] - p[k - 2]);

    Laurent g = Laurent(f.coeff(0));
    for (int k = 1; k <= n; ++k) {
        const Int& c = f.coeff(k);
        if (c != 0) g += Laurent::term(c, 0) * p[k];
    }
    return g;
}

}  // namespace rinv
