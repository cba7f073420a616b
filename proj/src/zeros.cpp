#include "gentrig/zeros.hpp"

#include "gentrig/coeffs.hpp"
#include "gentrig/oracle.hpp"
#include "gentrig/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace gentrig::zeros {

namespace {
const double kPi = boost::math::constants::pi<double>();
using Cd = std::complex<double>;

double kcond_threshold(double a) { return (a + std::abs(a) - 2) / 4; }

bool kcond_holds(double a, double alpha, long k) {
    return static_cast<double>(k) + alpha > kcond_threshold(a);
}
} // namespace

expansions::CertifiedValue x_expand(double a, std::complex<double> w, std::optional<unsigned> order) {
    if (!(a < 1)) throw std::domain_error("x_expand: requires a < 1");
    if (!(w.real() > 0)) throw std::domain_error("x_expand: requires Re w > 0");

    expansions::Truncation mode = expansions::Truncation::requested;
    unsigned N;
    if (order) {
        N = *order;
        if (N > 60) throw std::domain_error("x_expand: truncation order capped at 60");
    } else {
        N = expansions::optimal_order(a, std::abs(w), expansions::Series::x);
        mode = expansions::Truncation::optimal;
    }

    const double x = 1 - a;
    Cd sum = w;
    Cd wp = w;
    for (unsigned n = 0; n < N; ++n) {
        const double cn = coeffs::eval_poly(coeffs::c_poly(n), x);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        sum += Cd(sgn * cn / (2.0 * n + 1)) / wp;
        wp *= w * w;
    }

    expansions::CertifiedValue out;
    out.value = sum;
    out.terms_used = N;
    out.truncation = mode;
    const double t = std::arg(w);
    const double cN = coeffs::eval_poly(coeffs::c_poly(N), x);
    const double factor = (std::abs(t) <= kPi / 4) ? 1.0 : std::abs(1.0 / std::sin(2 * t));
    out.error_bound = cN / (2.0 * N + 1) / std::pow(std::abs(w), 2.0 * N + 1) * factor;
    if (w.imag() == 0.0) {
        out.sign_certificate = (N % 2 == 0) ? expansions::RemainderSign::remainder_positive
                                            : expansions::RemainderSign::remainder_negative;
    }
    return out;
}

long first_index(double a, double alpha) {
    const double thr = kcond_threshold(a) - alpha;
    long k = static_cast<long>(std::floor(thr)) + 1;
    while (!kcond_holds(a, alpha, k)) ++k;  // guards the exact-boundary case
    return k;
}

ZeroRecord zero_seed(double a, double alpha, long k) {
    if (!(a < 1)) throw std::domain_error("zero_seed: requires a < 1");
    if (!(alpha >= 0 && alpha < 1)) throw std::domain_error("zero_seed: alpha in [0,1)");
    if (!kcond_holds(a, alpha, k)) {
        throw std::domain_error("zero_seed: index condition k + alpha > (a+|a|-2)/4 fails; no such zero");
    }
    ZeroRecord rec;
    rec.a = a;
    rec.alpha = alpha;
    rec.k = k;
    rec.kappa = static_cast<double>(k) + alpha;
    const double w = kPi * rec.kappa;

    if (w > 0) {
        expansions::CertifiedValue cv = x_expand(a, Cd(w), std::nullopt);
        if (cv.error_bound && *cv.error_bound <= 1.0) {
            rec.seed = cv.value.real();
            rec.seed_bound = cv.error_bound;
            return rec;
        }
    }
    // Small kappa: the asymptotic radius is useless; locate the zero by a
    // phase-targeted bisection instead and leave the certificate absent.
    const double target = w;
    double lo = 1e-8, hi = std::max(4.0, 2 * std::abs(w) + 4);
    auto shifted = [&](double z) {
        return oracle::phase_modulus(a, z).phi - kPi / 2 - target;
    };
    double flo = shifted(lo), fhi = shifted(hi);
    for (int tries = 0; tries < 40 && flo * fhi > 0; ++tries) {
        if (flo > 0) {
            lo /= 4;
            flo = shifted(lo);
        } else {
            hi *= 2;
            fhi = shifted(hi);
        }
    }
    if (flo * fhi > 0) throw NonConvergence("zero_seed: failed to bracket small-kappa zero");
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (1 + hi); ++it) {
        double m = 0.5 * (lo + hi);
        if (shifted(m) > 0) hi = m; else lo = m;
    }
    rec.seed = 0.5 * (lo + hi);
    rec.seed_bound = std::nullopt;
    return rec;
}

ZeroRecord zero_refine(const ZeroRecord& rec) {
    using hp::Real;
    ZeroRecord out = rec;
    const Real a(rec.a), alpha(rec.alpha);
    const Real tol("1e-30");
    Real z(rec.seed);
    if (!(z > 0)) throw std::domain_error("zero_refine: seed must be positive");

    // Certified bracket: Thm-3 radius contains the root whenever present.
    Real lo = rec.seed_bound ? Real(rec.seed) - Real(*rec.seed_bound) - Real("1e-12")
                             : z / 2;
    Real hi = rec.seed_bound ? Real(rec.seed) + Real(*rec.seed_bound) + Real("1e-12")
                             : z + hp::pi() / 2;
    if (!(lo > 0)) lo = Real("1e-10");

    const Real scale_exp = a - 1;
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
        Real ti = oracle::ti_real_hp(a, z, alpha, tol);
        Real scale = pow(z, scale_exp);
        if (abs(ti) <= Real("1e-14") * scale) {
            converged = true;
            break;
        }
        Real deriv = -scale * cos(z - hp::pi() * alpha);
        Real znew = z - ti / deriv;
        if (!(znew > lo && znew < hi)) znew = (lo + hi) / 2;
        if (znew == z) {
            converged = true;
            break;
        }
        z = znew;
    }
    if (!converged) {
        // Newton landed on a flat spot; fall back to bisection on ti.
        Real flo = oracle::ti_real_hp(a, lo, alpha, tol);
        Real fhi = oracle::ti_real_hp(a, hi, alpha, tol);
        if (flo * fhi > 0) throw NonConvergence("zero_refine: did not converge in 50 iterations");
        for (int it = 0; it < 200 && hi - lo > Real("1e-35") * (1 + hi); ++it) {
            Real m = (lo + hi) / 2;
            if (oracle::ti_real_hp(a, m, alpha, tol) * flo > 0) {
                lo = m;
                flo = oracle::ti_real_hp(a, lo, alpha, tol);
            } else {
                hi = m;
            }
        }
        z = (lo + hi) / 2;
    }
    out.refined = static_cast<double>(z);
    out.residual = static_cast<double>(abs(oracle::ti_real_hp(a, z, alpha, tol)));
    if (rec.seed_bound && std::abs(*out.refined - rec.seed) > *rec.seed_bound + 1e-12) {
        throw std::logic_error("zero_refine: refined root escaped the seed certificate");
    }
    return out;
}

std::pair<double, double> literature_bracket(double a, double alpha, long k) {
    if (!(alpha == 0.0 || alpha == 0.5)) {
        throw std::domain_error("literature_bracket: stated only for alpha in {0, 1/2}");
    }
    if (!(a < 1)) throw std::domain_error("literature_bracket: requires a < 1");
    if (!kcond_holds(a, alpha, k)) throw std::domain_error("literature_bracket: index condition fails");
    const double kappa = static_cast<double>(k) + alpha;
    const double w = kPi * kappa;
    if (!(w > 0)) throw std::domain_error("literature_bracket: requires pi*kappa > 0");
    const double c0 = 1 - a;  // c_0(1-a)
    const double hi = w + (c0 / w) * 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * (1 - a) / (w * w)));
    return {w, hi};
}

std::vector<ZeroRecord> enumerate(double a, double alpha, long k_from, long k_to, bool refine) {
    std::vector<ZeroRecord> out;
    const long k0 = std::max(k_from, first_index(a, alpha));
    for (long k = k0; k <= k_to; ++k) {
        ZeroRecord rec = zero_seed(a, alpha, k);
        if (refine) rec = zero_refine(rec);
        out.push_back(rec);
    }
    return out;
}

long count_zeros_scan(double a, double alpha, double zmax) {
    const double step = 0.05;
    long count = 0;
    double zprev = 1e-4;
    double fprev = oracle::ti_fast(a, zprev, alpha);
    for (double z = zprev + step; z < zmax + step / 2; z += step) {
        double zz = std::min(z, zmax);
        double f = oracle::ti_fast(a, zz, alpha);
        if (fprev == 0.0 || f * fprev < 0) ++count;
        fprev = f;
        if (zz >= zmax) break;
    }
    return count;
}

long count_zeros_phase(double a, double alpha, double zmax) {
    // phi is strictly increasing, so z_k <= zmax iff pi(k+alpha+1/2) <= phi(a,zmax).
    const double phimax = oracle::phase_modulus(a, zmax).phi;
    long count = 0;
    for (long k = first_index(a, alpha);; ++k) {
        if (kPi * (static_cast<double>(k) + alpha + 0.5) <= phimax) ++count;
        else break;
    }
    return count;
}

} // namespace gentrig::zeros
