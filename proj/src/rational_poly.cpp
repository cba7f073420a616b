#include "gentrig/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gentrig {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
    normalise();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::linear(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c, Rational(1)});
}

RationalPolynomial RationalPolynomial::pochhammer(unsigned m) {
    RationalPolynomial p = constant(Rational(1));
    for (unsigned j = 0; j < m; ++j) p = p * linear(Rational(j));
    return p;
}

void RationalPolynomial::normalise() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalise();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalise();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    normalise();
    return *this;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::divide_exact_linear(const Rational& c) const {
    if (coeffs_.size() < 2) throw std::logic_error("divide_exact_linear: degree 0 dividend");
    // Synthetic division by (x + c), working from the leading coefficient.
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    std::vector<Rational> work = coeffs_;
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
        q[k - 1] = work[k];
        work[k - 1] -= q[k - 1] * c;
    }
    if (work[0] != 0) {
        throw std::logic_error("divide_exact_linear: nonzero remainder (coefficient recurrence bug)");
    }
    return RationalPolynomial(std::move(q));
}

std::string RationalPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0 && !(coeffs_.size() == 1)) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace gentrig
