#include "pwcalc/laurent.hpp"

#include <sstream>

#include "pwcalc/errors.hpp"

namespace pwcalc {

LaurentPoly LaurentPoly::constant(Int c) {
    return monomial(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, Int c) {
    LaurentPoly p;
    p.set_coeff(exponent, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int lowest_exp, const std::vector<Int>& coeffs) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.set_coeff(lowest_exp + static_cast<int>(i), coeffs[i]);
    return p;
}

Int LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int exponent, Int c) {
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = std::move(c);
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw Error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw Error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::evaluate(const Int& x) const {
    // Negative exponents require |x| = 1 to stay in the integers.
    Int total = 0;
    for (const auto& [e, c] : coeffs_) {
        if (e >= 0) {
            Int p = 1;
            for (int i = 0; i < e; ++i) p *= x;
            total += c * p;
        } else {
            if (x != 1 && x != -1)
                throw Error("evaluate: negative exponent at non-unit argument");
            Int p = 1;
            for (int i = 0; i < -e; ++i) p *= x;
            total += c * p;  // x^{-1} = x for x = +-1
        }
    }
    return total;
}

bool LaurentPoly::all_coeffs_nonneg() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

bool LaurentPoly::is_palindromic(int center) const {
    for (const auto& [e, c] : coeffs_)
        if (c != coeff(2 * center - e)) return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + k] = c;
    return out;
}

LaurentPoly LaurentPoly::exponents_scaled(int num, int den) const {
    if (den == 0) throw Error("exponents_scaled: zero denominator");
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) {
        const long long scaled = static_cast<long long>(e) * num;
        if (scaled % den != 0)
            throw Error("exponents_scaled: exponent " + std::to_string(e) +
                        " does not scale to an integer");
        out.coeffs_[static_cast<int>(scaled / den)] = c;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set_coeff(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set_coeff(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.set_coeff(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_) c *= s;
    return *this;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error("poly_divide_exact: zero divisor");
    if (num.is_zero()) return {};

    // An exact quotient q has min_exp(q) = min_exp(num) - min_exp(den),
    // because the lowest terms of den and q multiply to a nonzero term.
    const int lowest_quot_exp = num.min_exp() - den.min_exp();
    LaurentPoly rem = num;
    const Int den_lead = den.coeff(den.max_exp());
    const int den_deg = den.max_exp();

    LaurentPoly quot;
    while (!rem.is_zero()) {
        const int qexp = rem.max_exp() - den_deg;
        if (qexp < lowest_quot_exp)
            throw InexactDivision("poly_divide_exact: nonzero remainder");
        const Int lead = rem.coeff(rem.max_exp());
        if (lead % den_lead != 0)
            throw InexactDivision("poly_divide_exact: leading coefficient not divisible");
        LaurentPoly term = LaurentPoly::monomial(qexp, lead / den_lead);
        quot += term;
        rem -= term * den;
    }
    return quot;
}

} // namespace pwcalc
