#pragma once

#include "gentrig/precision.hpp"

#include <complex>

namespace gentrig {

/// log Gamma(w) for complex w away from the poles, accurate to ~1e-45.
/// Stirling's series after shifting Re(w) past 40; the imaginary part is
/// the continuous branch reached from the positive real axis.
hp::Complex lgamma_hp(hp::Complex w);

inline hp::Complex tgamma_hp(const hp::Complex& w) { return exp(lgamma_hp(w)); }

/// Gamma(Re p) / |Gamma(p)|, the ratio appearing in the terminant bounds.
double gamma_ratio_abs(std::complex<double> p);

/// chi(p) = sqrt(pi) Gamma(p/2 + 1) / Gamma((p+1)/2), p > 0.
double chi(double p);

/// Watson's two-sided estimate: sqrt(pi/2 (p + 1/2)) < chi(p) < sqrt(pi/2 (p + 2/pi)).
double chi_watson_lower(double p);
double chi_watson_upper(double p);

} // namespace gentrig
