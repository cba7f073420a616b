#include "gentrig/oracle.hpp"

#include "gentrig/coeffs.hpp"
#include "gentrig/gammafn.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/terminant.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace gentrig::oracle {

using hp::Complex;
using hp::Real;

namespace {

std::atomic<double> g_precision{1e-13};

Real pi_hp() { return hp::pi(); }

Real quad_tol(const Real& tol) {
    // Push the internal quadrature far below the requested target; the
    // 50-digit type keeps this cheap.
    Real t = tol * Real("1e-20");
    if (t < Real("1e-42")) t = Real("1e-42");
    if (t > Real("1e-10")) t = Real("1e-10");
    return t;
}

// Past this point e^{-u} is below 1e-43000; returning exact zero keeps the
// far double-exponential nodes from producing inf * 0 in the power factors.
const Real kUCut("1e5");

Real precision_to_tol(double precision) {
    double p = precision > 0 ? precision : default_precision();
    return Real(p);
}

bool is_one(const Complex& a) { return a.real() == 1 && a.imag() == 0; }

/// 1/Gamma(x) for real x, zero at the poles.
Real recip_gamma(const Real& x) {
    if (x <= 0 && x == floor(x)) return Real(0);
    return 1 / boost::math::tgamma(x);
}

} // namespace

double default_precision() { return g_precision.load(); }
void set_default_precision(double target) {
    if (!(target > 0) || target < 1e-15) throw std::domain_error("precision target out of range");
    g_precision.store(target);
}

FGPairHP f_g_quadrature_hp(const Complex& a, const Complex& z, const Real& tol) {
    if (z == Complex(0)) throw std::domain_error("f_g_quadrature: z must be nonzero");
    if (is_one(a)) return {Complex(Real(1)), Complex(Real(0))};
    if (!(a.real() < 1)) throw std::domain_error("f_g_quadrature: requires Re(a) < 1 (a = 1 is closed form)");
    const Real t = atan2(z.imag(), z.real());
    if (!(abs(t) <= 3 * pi_hp() / 4 + Real("1e-30"))) {
        throw std::domain_error("f_g_quadrature: supported sector is |arg z| <= 3pi/4");
    }
    const Real beta(terminant::continuation_ray(static_cast<double>(t)));
    const Complex eib(cos(beta), sin(beta));
    const Complex i_beta(Real(0), beta);
    const Real qtol = quad_tol(tol);

    auto kernel = [&](const Complex& s) {
        Complex ratio = s / z;
        return Complex(Real(1)) / (Complex(Real(1)) + ratio * ratio);
    };
    Complex If = integrate_half_line<Real>(
        [&](Real u) -> Complex {
            if (u > kUCut) return Complex(Real(0));
            Complex s = Complex(u) * eib;
            return exp(-a * (Complex(log(u)) + i_beta) - s) * kernel(s) * eib;
        },
        qtol);
    Complex Ig = integrate_half_line<Real>(
        [&](Real u) -> Complex {
            if (u > kUCut) return Complex(Real(0));
            Complex s = Complex(u) * eib;
            return exp((Complex(Real(1)) - a) * (Complex(log(u)) + i_beta) - s) * kernel(s) * eib;
        },
        qtol);
    Complex pref = exp((a - Complex(Real(1))) * log(z) - lgamma_hp(Complex(Real(1)) - a));
    return {pref * If, pref / z * Ig};
}

FGRealHP f_g_real_hp(const Real& a, const Real& z, const Real& tol) {
    if (!(z > 0)) throw std::domain_error("f_g_real: requires z > 0");
    if (a == 1) return {Real(1), Real(0)};
    if (!(a < 1)) throw std::domain_error("f_g_real: requires a < 1");
    const Real qtol = quad_tol(tol);
    const Real z2 = z * z;
    Real If = integrate_half_line<Real>(
        [&](Real u) -> Real {
            if (u > kUCut) return Real(0);
            return exp(-a * log(u) - u) / (1 + u * u / z2);
        },
        qtol);
    Real Ig = integrate_half_line<Real>(
        [&](Real u) -> Real {
            if (u > kUCut) return Real(0);
            return exp((1 - a) * log(u) - u) / (1 + u * u / z2);
        },
        qtol);
    Real pref = pow(z, a - 1) / boost::math::tgamma(1 - a);
    return {pref * If, pref / z * Ig};
}

hp::Complex incomplete_gamma_upper_hp(const Real& a, const Complex& w, const Real& tol) {
    if (!(a < 1)) throw std::domain_error("incomplete_gamma_upper: requires a < 1");
    if (w == Complex(0)) throw std::domain_error("incomplete_gamma_upper: requires w != 0");
    const Real t = atan2(w.imag(), w.real());
    if (!(abs(t) <= 7 * pi_hp() / 8 + Real("1e-30"))) {
        throw std::domain_error("incomplete_gamma_upper: supported sector is |arg w| <= 7pi/8");
    }
    // Pole of the integrand at s = -w sits at angle arg w -+ pi; rotate the
    // ray toward +-pi/4 once |arg w| > 3pi/4 to keep it well separated.
    Real beta(0);
    if (abs(t) > 3 * pi_hp() / 4) beta = (t > 0 ? 1 : -1) * pi_hp() / 4;
    const Complex eib(cos(beta), sin(beta));
    const Complex i_beta(Real(0), beta);
    Complex I = integrate_half_line<Real>(
        [&](Real u) -> Complex {
            if (u > kUCut) return Complex(Real(0));
            Complex s = Complex(u) * eib;
            return exp(Real(-a) * (Complex(log(u)) + i_beta) - s) / (Complex(Real(1)) + s / w) * eib;
        },
        quad_tol(tol));
    Complex pref = exp((Complex(Real(a)) - Complex(Real(1))) * log(w) - w);
    return pref / boost::math::tgamma(1 - a) * I;
}

hp::Complex upper_gamma_series_hp(const Real& a, const Real& wmod, const Real& warg) {
    if (a <= 0 && a == floor(a)) {
        throw std::domain_error("upper_gamma_series: a at a gamma pole; use the quadrature route");
    }
    if (wmod == 0) return Complex(boost::math::tgamma(a));
    const Complex w = hp::polar(wmod, warg);
    // gamma*(a,w) = e^{-w} sum_k w^k / Gamma(a+k+1), entire in w.
    Complex sum(Real(0));
    Complex term(recip_gamma(a + 1));
    Real scale = 0;
    const unsigned kmax = 4000;
    for (unsigned k = 0; k < kmax; ++k) {
        sum += term;
        Real mag = abs(term);
        if (mag > scale) scale = mag;
        if (k > static_cast<unsigned>(wmod) + 8 && mag < Real("1e-65") * (scale + abs(sum))) break;
        term *= w / (a + Real(k) + 1);
    }
    Complex gstar = exp(-w) * sum;
    Complex wa = exp(Real(a) * Complex(log(wmod), warg));
    return boost::math::tgamma(a) * (Complex(Real(1)) - wa * gstar);
}

PhasePointHP phase_modulus_hp(const Real& a, const Real& z, const Real& tol) {
    if (!(a < 1)) throw std::domain_error("phase_modulus: requires a < 1");
    if (!(z > 0)) throw std::domain_error("phase_modulus: requires z > 0");
    FGRealHP fg = f_g_real_hp(a, z, tol);
    PhasePointHP out;
    out.f = fg.f;
    out.g = fg.g;
    out.m2 = fg.f * fg.f + fg.g * fg.g;
    out.phi = z + atan2(fg.f, fg.g);
    return out;
}

namespace {

struct GammaPair {
    Complex lower;  // Gamma(a, z e^{-i pi/2})
    Complex upper;  // Gamma(a, z e^{+i pi/2})
};

GammaPair gamma_pair(const Real& a, const Complex& z, const Real& tol) {
    const Real m = abs(z);
    const Real t = atan2(z.imag(), z.real());
    GammaPair gp;
    gp.lower = incomplete_gamma_upper_hp(a, hp::polar(m, t - pi_hp() / 2), tol);
    gp.upper = incomplete_gamma_upper_hp(a, hp::polar(m, t + pi_hp() / 2), tol);
    return gp;
}

Complex phase_from_pair(const Real& a, const Complex& z, const GammaPair& gp) {
    const Complex i(Real(0), Real(1));
    Complex ratio = exp(i * pi_hp() * a) * gp.lower / gp.upper;
    Complex phi_pr = log(ratio) / (2 * i);
    // The principal log pins phi modulo pi; lift using the optimally
    // truncated large-z series phi ~ z + pi/2 - sum (+-) t_n/((2n+1)z^{2n+1}).
    // The remainder bound must stay below pi/2 or the lift is ambiguous.
    const Real x = 1 - a;
    const Real zmag = abs(z);
    const Real targ = atan2(z.imag(), z.real());
    const Real fac = (abs(targ) <= pi_hp() / 4) ? Real(1) : abs(1 / sin(2 * targ));
    unsigned nopt = 0;
    Real best_term(0);
    {
        Real zp = zmag;
        Real prev(0);
        for (unsigned n = 0; n <= 6; ++n) {
            Real term = coeffs::t_poly(n).eval<Real>(x) / ((2 * n + 1) * zp);
            if (n == 0 || term < best_term) {
                best_term = term;
                nopt = n;
            }
            if (n > 0 && term > prev) break;
            prev = term;
            zp *= zmag * zmag;
        }
    }
    if (!(best_term * fac < Real("1.4"))) {
        throw NonConvergence("phase_complex: |z| too small to pin the phase branch");
    }
    Complex approx = z + pi_hp() / 2;
    Complex zp = z;
    for (unsigned n = 0; n < nopt; ++n) {
        Real tn = coeffs::t_poly(n).eval<Real>(x);
        Real sgn = (n % 2 == 0) ? 1 : -1;
        approx -= sgn * tn / ((2 * n + 1) * zp);
        zp *= z * z;
    }
    Real mreal = (approx.real() - phi_pr.real()) / pi_hp();
    long mint = std::lround(static_cast<double>(mreal));
    return phi_pr + Complex(pi_hp() * Real(mint));
}

} // namespace

hp::Complex phase_complex_hp(const Real& a, const Complex& z, const Real& tol) {
    if (!(a < 1)) throw std::domain_error("phase_complex: requires a < 1");
    if (!(z.real() > 0)) throw std::domain_error("phase_complex: requires Re z > 0");
    return phase_from_pair(a, z, gamma_pair(a, z, tol));
}

hp::Real invert_phase_hp(const Real& a, const Real& w, const Real& tol) {
    if (!(a < 1)) throw std::domain_error("invert_phase: requires a < 1");
    const Real wmin = pi_hp() * (a + abs(a) - 2) / 4;
    if (!(w > wmin)) throw std::domain_error("invert_phase: w below the range of Phi");

    auto shifted_phase = [&](const Real& z) {
        return phase_modulus_hp(a, z, tol).phi - pi_hp() / 2 - w;
    };

    // Bracket [w - c0(1-a)/w - 1, w + c0(1-a)/w + 1], clamped positive,
    // widened if the residual does not change sign across it.
    Real halfwidth = abs(1 - a) / std::max(Real(1), abs(w)) + 1;
    Real lo = w - halfwidth, hi = w + halfwidth;
    if (!(lo > 0)) lo = Real("1e-8");
    Real flo = shifted_phase(lo), fhi = shifted_phase(hi);
    for (int tries = 0; tries < 60 && flo * fhi > 0; ++tries) {
        if (flo > 0) {
            lo /= 2;
            flo = shifted_phase(lo);
        } else {
            hi = hi * 2 + 1;
            fhi = shifted_phase(hi);
        }
    }
    if (flo * fhi > 0) throw NonConvergence("invert_phase: could not bracket the root");

    Real z = std::min(std::max((lo + hi) / 2, lo), hi);
    if (w > 0) z = std::min(std::max(w, lo), hi);
    Real target = tol * std::max(Real(1), abs(w));
    for (int it = 0; it < 80; ++it) {
        PhasePointHP pp = phase_modulus_hp(a, z, tol);
        Real h = pp.phi - pi_hp() / 2 - w;
        if (h > 0) hi = z; else lo = z;
        if (abs(h) <= target) return z;
        Real deriv = pow(z, a - 1) * pp.f / pp.m2;
        Real step = h / deriv;
        Real znew = z - step;
        if (!(znew > lo && znew < hi)) znew = (lo + hi) / 2;
        if (znew == z) return z;
        z = znew;
    }
    throw NonConvergence("invert_phase: Newton did not converge");
}

hp::Complex invert_phase_complex_hp(const Real& a, const Complex& w, const Real& tol) {
    if (!(a < 1)) throw std::domain_error("invert_phase_complex: requires a < 1");
    if (w.imag() == 0) return Complex(invert_phase_hp(a, w.real(), tol));
    if (!(w.real() > 0)) throw std::domain_error("invert_phase_complex: requires Re w > 0");
    // Seed from the first inversion-series terms.
    Real x = 1 - a;
    Complex z = w + Complex(coeffs::t_poly(0).eval<Real>(x)) / w;  // c_0 = t_0 = x
    Real target = tol * std::max(Real(1), abs(w));
    for (int it = 0; it < 80; ++it) {
        GammaPair gp = gamma_pair(a, z, tol);
        Complex phi = phase_from_pair(a, z, gp);
        Complex h = phi - pi_hp() / 2 - w;
        if (abs(h) <= target) return z;
        // phi' = z^{a-1} f / M^2 with f, g assembled from the same pair.
        const Complex i(Real(0), Real(1));
        Complex e1 = exp(i * pi_hp() * a / 2 - i * z);
        Complex e2 = exp(-i * pi_hp() * a / 2 + i * z);
        Complex f = (e1 * gp.lower - e2 * gp.upper) / (2 * i);
        Complex g = (e1 * gp.lower + e2 * gp.upper) / 2;
        Complex m2 = f * f + g * g;
        Complex deriv = exp((Complex(Real(a)) - Complex(Real(1))) * log(z)) * f / m2;
        Complex znew = z - h / deriv;
        if (!(znew.real() > 0)) znew = (z + Complex(abs(w))) / 2;
        z = znew;
    }
    throw NonConvergence("invert_phase_complex: Newton did not converge");
}

hp::Complex ti_hp(const Real& a, const Complex& z, const Real& alpha, const Real& tol) {
    FGPairHP fg = f_g_quadrature_hp(Complex(a), z, tol);
    Complex ph = z - Complex(pi_hp() * alpha);
    return -fg.f * sin(ph) + fg.g * cos(ph);
}

hp::Real ti_real_hp(const Real& a, const Real& z, const Real& alpha, const Real& tol) {
    FGRealHP fg = (a == 1) ? FGRealHP{Real(1), Real(0)} : f_g_real_hp(a, z, tol);
    Real ph = z - pi_hp() * alpha;
    return -fg.f * sin(ph) + fg.g * cos(ph);
}

std::pair<hp::Complex, hp::Complex> si_ci_series_hp(const Real& a, const Complex& w) {
    const Real m = abs(w);
    const Real t = atan2(w.imag(), w.real());
    const Complex i(Real(0), Real(1));
    const Complex e1 = exp(i * pi_hp() * a / 2);
    const Complex e2 = exp(-i * pi_hp() * a / 2);
    Complex G1, G2;
    if (m == 0) {
        if (!(a > 0)) throw std::domain_error("si_ci_series: w = 0 needs a > 0");
        G1 = G2 = Complex(boost::math::tgamma(a));
    } else {
        G1 = upper_gamma_series_hp(a, m, t - pi_hp() / 2);
        G2 = upper_gamma_series_hp(a, m, t + pi_hp() / 2);
    }
    Complex si = (e1 * G1 - e2 * G2) / (2 * i);
    Complex ci = (e1 * G1 + e2 * G2) / 2;
    return {si, ci};
}

hp::Real classic_Si(const Real& z) {
    // Si(z) = sum (-1)^k z^{2k+1} / ((2k+1)(2k+1)!)
    Real sum = 0, term = z;
    for (unsigned k = 0;; ++k) {
        sum += term / (2 * k + 1);
        Real next = -term * z * z / Real((2 * k + 2) * (2 * k + 3));
        if (abs(next) < Real("1e-70") * (1 + abs(sum)) && Real(2 * k) > abs(z)) break;
        term = next;
        if (k > 2000) throw NonConvergence("classic_Si series");
    }
    return sum;
}

hp::Real classic_Ci(const Real& z) {
    // Ci(z) = gamma + log z + sum (-1)^k z^{2k} / ((2k)(2k)!)
    Real sum = 0, term = -z * z / 2;
    for (unsigned k = 1;; ++k) {
        sum += term / (2 * k);
        Real next = -term * z * z / Real((2 * k + 1) * (2 * k + 2));
        if (abs(next) < Real("1e-70") * (1 + abs(sum)) && Real(2 * k) > abs(z)) break;
        term = next;
        if (k > 2000) throw NonConvergence("classic_Ci series");
    }
    return boost::math::constants::euler<Real>() + log(z) + sum;
}

// ---------------------------------------------------------------------------
// Double-facing wrappers
// ---------------------------------------------------------------------------

std::pair<std::complex<double>, std::complex<double>>
f_g_quadrature(std::complex<double> a, std::complex<double> z, double precision) {
    FGPairHP fg = f_g_quadrature_hp(hp::to_complex(a), hp::to_complex(z), precision_to_tol(precision));
    return {hp::to_double(fg.f), hp::to_double(fg.g)};
}

std::complex<double> incomplete_gamma_upper(double a, std::complex<double> w, double precision) {
    return hp::to_double(incomplete_gamma_upper_hp(Real(a), hp::to_complex(w), precision_to_tol(precision)));
}

OraclePoint phase_modulus(double a, double z, double precision) {
    PhasePointHP pp = phase_modulus_hp(Real(a), Real(z), precision_to_tol(precision));
    OraclePoint out;
    out.a = a;
    out.z = z;
    out.precision_target = precision > 0 ? precision : default_precision();
    out.f = static_cast<double>(pp.f);
    out.g = static_cast<double>(pp.g);
    out.m2 = static_cast<double>(pp.m2);
    out.phi = static_cast<double>(pp.phi);
    return out;
}

std::complex<double> phase_complex(double a, std::complex<double> z, double precision) {
    return hp::to_double(phase_complex_hp(Real(a), hp::to_complex(z), precision_to_tol(precision)));
}

double invert_phase(double a, double w, double precision) {
    return static_cast<double>(invert_phase_hp(Real(a), Real(w), precision_to_tol(precision)));
}

std::complex<double> ti(double a, std::complex<double> z, double alpha, double precision) {
    return hp::to_double(ti_hp(Real(a), hp::to_complex(z), Real(alpha), precision_to_tol(precision)));
}

double ti_fast(double a, double z, double alpha) {
    if (!(z > 0)) throw std::domain_error("ti_fast: requires z > 0");
    double f, g;
    if (a == 1) {
        f = 1;
        g = 0;
    } else {
        const double z2 = z * z;
        double If = integrate_half_line<double>(
            [&](double u) {
                if (u > 700.0) return 0.0;
                return std::exp(-a * std::log(u) - u) / (1 + u * u / z2);
            },
            1e-11);
        double Ig = integrate_half_line<double>(
            [&](double u) {
                if (u > 700.0) return 0.0;
                return std::exp((1 - a) * std::log(u) - u) / (1 + u * u / z2);
            },
            1e-11);
        double pref = std::pow(z, a - 1) / std::tgamma(1 - a);
        f = pref * If;
        g = pref / z * Ig;
    }
    const double pi = boost::math::constants::pi<double>();
    return -f * std::sin(z - pi * alpha) + g * std::cos(z - pi * alpha);
}

} // namespace gentrig::oracle
