#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>

namespace gentrig::hp {

// 50-decimal-digit working precision for every oracle path.  Acceptance
// assertions sit at 1e-10..1e-13, so this leaves several orders of
// magnitude of headroom even after quadrature and cancellation losses.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Complex to_complex(const std::complex<double>& z) { return Complex(Real(z.real()), Real(z.imag())); }
inline std::complex<double> to_double(const Complex& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Principal-branch polar constructor |w| e^{i ang}, with ang allowed
/// outside (-pi, pi] when a continued branch is intended.
inline Complex polar(const Real& mod, const Real& ang) {
    return Complex(mod * cos(ang), mod * sin(ang));
}

} // namespace gentrig::hp
