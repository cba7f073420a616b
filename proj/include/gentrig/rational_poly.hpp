#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gentrig {

using Rational = boost::multiprecision::mpq_rational;

/// Dense polynomial over exact rationals; coeffs[i] is the coefficient of x^i.
/// Normalised form never carries trailing zero coefficients (the zero
/// polynomial is stored as the single coefficient 0).
class RationalPolynomial {
public:
    RationalPolynomial() : coeffs_{Rational(0)} {}
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    /// x + c
    static RationalPolynomial linear(const Rational& c);
    /// Pochhammer polynomial (x)_m = x (x+1) ... (x+m-1).
    static RationalPolynomial pochhammer(unsigned m);

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }
    const Rational& constant_term() const { return coeffs_.front(); }

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& c);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
    RationalPolynomial operator*(const RationalPolynomial& rhs) const;
    bool operator==(const RationalPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Exact quotient by the monic linear factor (x + c). Throws
    /// std::logic_error if the division leaves a remainder.
    RationalPolynomial divide_exact_linear(const Rational& c) const;

    /// Horner evaluation. T must construct from Rational via explicit cast
    /// or from double; specialised below for double and long double.
    template <typename T>
    T eval(const T& x) const {
        T acc = T(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + static_cast<T>(coeffs_[i]);
        }
        return acc;
    }

    std::string to_string() const;

private:
    void normalise();
    std::vector<Rational> coeffs_;
};

} // namespace gentrig
