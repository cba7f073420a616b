#pragma once

#include "gentrig/precision.hpp"

#include <complex>
#include <utility>

namespace gentrig::oracle {

/// Default relative precision target for the double-facing oracle API.
/// Overridable per call; the extended-precision internals always run with a
/// large headroom below the requested target.
double default_precision();
void set_default_precision(double target);

// ---------------------------------------------------------------------------
// Extended-precision core (cpp_bin_float_50).  These are the routines the
// test suites assert against.
// ---------------------------------------------------------------------------

struct FGPairHP {
    hp::Complex f;
    hp::Complex g;
};

/// Non-oscillatory auxiliary functions via the Stieltjes-type integrals
///   f(a,z) = z^{a-1}/Gamma(1-a) int_0^inf s^{-a} e^{-s}/(1+(s/z)^2) ds,
///   g(a,z) = z^{a-2}/Gamma(1-a) int_0^inf s^{1-a} e^{-s}/(1+(s/z)^2) ds,
/// continued past |arg z| = 3pi/8 up to 3pi/4 by ray rotation.  Requires
/// Re(a) < 1 (a == 1 returns the closed form f = 1, g = 0).
FGPairHP f_g_quadrature_hp(const hp::Complex& a, const hp::Complex& z, const hp::Real& tol);

/// Real-axis fast path (real integrands), a < 1 real, z > 0.
struct FGRealHP {
    hp::Real f;
    hp::Real g;
};
FGRealHP f_g_real_hp(const hp::Real& a, const hp::Real& z, const hp::Real& tol);

/// Upper incomplete gamma via
///   Gamma(a,w) = w^{a-1} e^{-w}/Gamma(1-a) int_0^inf s^{-a} e^{-s}/(1+s/w) ds
/// for a < 1 and |arg w| <= 7pi/8 (integration ray rotated away from the
/// pole at s = -w once |arg w| > 3pi/4).
hp::Complex incomplete_gamma_upper_hp(const hp::Real& a, const hp::Complex& w, const hp::Real& tol);

/// Branch-correct series route Gamma(a, w) = Gamma(a)(1 - w^a gamma*(a,w))
/// with w = wmod e^{i warg}, warg unrestricted (gamma* is entire).  Used as
/// an independent cross-check of the quadrature continuation.
hp::Complex upper_gamma_series_hp(const hp::Real& a, const hp::Real& wmod, const hp::Real& warg);

struct PhasePointHP {
    hp::Real f, g, m2, phi;
};

/// Modulus-squared and continuous phase on the positive axis:
/// M e^{i phi} = e^{iz}(g + i f), so phi = z + atan2(f, g); f, g > 0 keeps
/// the branch continuous and matches lim_{z->0+} phi = pi(a+|a|)/4.
PhasePointHP phase_modulus_hp(const hp::Real& a, const hp::Real& z, const hp::Real& tol);

/// Holomorphic phase on Re z > 0 via the principal-log representation
/// phi = (1/2i) log(e^{i pi a} Gamma(a, z e^{-i pi/2}) / Gamma(a, z e^{i pi/2})),
/// lifted by the integer multiple of pi fixed by phi ~ z + pi/2.
hp::Complex phase_complex_hp(const hp::Real& a, const hp::Complex& z, const hp::Real& tol);

/// Solve Phi(a, z) = w (Phi = phi - pi/2) for real w in range; bracketed
/// Newton with derivative phi' = z^{a-1} f / M^2.
hp::Real invert_phase_hp(const hp::Real& a, const hp::Real& w, const hp::Real& tol);

/// Complex-w extension of the phase inversion (Newton in the right
/// half-plane), used to reference the inverse-series bounds off the axis.
hp::Complex invert_phase_complex_hp(const hp::Real& a, const hp::Complex& w, const hp::Real& tol);

/// ti(a,z,alpha) = -f sin(z - pi alpha) + g cos(z - pi alpha).
hp::Complex ti_hp(const hp::Real& a, const hp::Complex& z, const hp::Real& alpha, const hp::Real& tol);
hp::Real ti_real_hp(const hp::Real& a, const hp::Real& z, const hp::Real& alpha, const hp::Real& tol);

/// si/ci(a, w) for Re a < 1 via the incomplete-gamma series route; valid for
/// any |arg w| < pi, small |w| included.
std::pair<hp::Complex, hp::Complex> si_ci_series_hp(const hp::Real& a, const hp::Complex& w);

/// Classical sine/cosine integrals by their everywhere-convergent power
/// series; test oracles for the a = 0 specialisations.
hp::Real classic_Si(const hp::Real& z);
hp::Real classic_Ci(const hp::Real& z);

// ---------------------------------------------------------------------------
// Double-facing API (CLI and convenience use).
// ---------------------------------------------------------------------------

struct OraclePoint {
    double a = 0;
    std::complex<double> z;
    double precision_target = 0;
    std::complex<double> f, g, m2;
    double phi = 0;
};

std::pair<std::complex<double>, std::complex<double>>
f_g_quadrature(std::complex<double> a, std::complex<double> z, double precision = 0);
std::complex<double> incomplete_gamma_upper(double a, std::complex<double> w, double precision = 0);
OraclePoint phase_modulus(double a, double z, double precision = 0);
std::complex<double> phase_complex(double a, std::complex<double> z, double precision = 0);
double invert_phase(double a, double w, double precision = 0);
std::complex<double> ti(double a, std::complex<double> z, double alpha, double precision = 0);

/// Low-accuracy (~1e-10) double-precision ti for dense sign-change scans.
double ti_fast(double a, double z, double alpha);

} // namespace gentrig::oracle
