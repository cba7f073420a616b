#include "gentrig/gammafn.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>

namespace gentrig {

namespace {
constexpr int kShiftTarget = 40;
constexpr int kStirlingTerms = 32;
} // namespace

hp::Complex lgamma_hp(hp::Complex w) {
    using hp::Complex;
    using hp::Real;
    if (w.real() <= 0 && w.imag() == 0) {
        Real r = w.real();
        if (r == floor(r)) throw std::domain_error("lgamma_hp: pole at nonpositive integer");
    }
    int shift = 0;
    if (w.real() < kShiftTarget) shift = static_cast<int>(kShiftTarget - floor(static_cast<double>(w.real())));
    Complex ws = w + Complex(Real(shift), Real(0));

    const Real half = Real(1) / 2;
    Complex acc = (ws - Complex(half)) * log(ws) - ws + Complex(log(2 * hp::pi()) / 2);
    Complex wpow = Complex(Real(1)) / ws; // ws^{-(2n-1)}
    const Complex ws2 = ws * ws;
    for (int n = 1; n <= kStirlingTerms; ++n) {
        Real b2n = boost::math::bernoulli_b2n<Real>(n);
        acc += Complex(b2n / (2 * n * (2 * n - 1))) * wpow;
        wpow /= ws2;
    }
    for (int j = 0; j < shift; ++j) acc -= log(w + Complex(Real(j)));
    return acc;
}

double gamma_ratio_abs(std::complex<double> p) {
    if (p.imag() == 0.0) return 1.0;
    hp::Real num = boost::math::lgamma(hp::Real(p.real()));
    hp::Complex den = lgamma_hp(hp::to_complex(p));
    return static_cast<double>(exp(num - den.real()));
}

double chi(double p) {
    if (!(p > 0)) throw std::domain_error("chi: requires p > 0");
    hp::Real lg = boost::math::lgamma(hp::Real(p) / 2 + 1) - boost::math::lgamma((hp::Real(p) + 1) / 2);
    return static_cast<double>(sqrt(hp::pi()) * exp(lg));
}

double chi_watson_lower(double p) {
    return std::sqrt((boost::math::constants::pi<double>() / 2) * (p + 0.5));
}

double chi_watson_upper(double p) {
    const double pi = boost::math::constants::pi<double>();
    return std::sqrt((pi / 2) * (p + 2 / pi));
}

} // namespace gentrig
