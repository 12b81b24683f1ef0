#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwcalc/bigint.hpp"

namespace pwcalc {

// Laurent polynomial in one formal variable with exact integer coefficients.
// Finitely supported; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(int exponent, Int c = 1);
    // Coefficient list starting at the given lowest exponent.
    static LaurentPoly from_coeffs(int lowest_exp, const std::vector<Int>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int exponent) const;
    void set_coeff(int exponent, Int c);

    // Require a nonzero polynomial.
    int min_exp() const;
    int max_exp() const;

    const std::map<int, Int>& coeffs() const { return coeffs_; }

    Int evaluate(const Int& x) const;

    bool all_coeffs_nonneg() const;

    // True iff coeff(center + k) == coeff(center - k) for all k.
    bool is_palindromic(int center) const;

    // Multiply by t^k.
    LaurentPoly shifted(int k) const;

    // Substitution t -> t^{num/den}; every exponent must scale to an integer.
    LaurentPoly exponents_scaled(int num, int den) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Int& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Int& s, LaurentPoly p) { return p *= s; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    std::string to_string(const std::string& var = "t") const;

private:
    std::map<int, Int> coeffs_;
};

// Exact quotient num / den; throws InexactDivision if none exists.
LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

} // namespace pwcalc
