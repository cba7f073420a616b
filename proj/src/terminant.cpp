#include "gentrig/terminant.hpp"

#include "gentrig/gammafn.hpp"
#include "gentrig/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gentrig::terminant {

namespace {
const double kPi = boost::math::constants::pi<double>();
}

const char* proposition_name(Proposition p) {
    switch (p) {
        case Proposition::b1_csc: return "B1_csc";
        case Proposition::b2_halfplane_a: return "B2_halfplane_a";
        case Proposition::b2_halfplane_b: return "B2_halfplane_b";
        case Proposition::b3_theta: return "B3_theta";
        case Proposition::b4_chi_a: return "B4_chi_a";
        case Proposition::b4_chi_b: return "B4_chi_b";
        case Proposition::b5_reflect: return "B5_reflect";
    }
    return "?";
}

TerminantQuery::TerminantQuery(std::complex<double> p_, std::complex<double> z_) : p(p_), z(z_) {
    if (!(p.real() > 0)) throw std::domain_error("TerminantQuery: requires Re(p) > 0");
    if (z == std::complex<double>(0.0, 0.0)) throw std::domain_error("TerminantQuery: requires z != 0");
}

double continuation_ray(double arg_z) {
    if (std::abs(arg_z) <= 3 * kPi / 8) return 0.0;
    return (arg_z > 0 ? 1.0 : -1.0) * 3 * kPi / 8;
}

hp::Complex terminant_eval_hp(const hp::Complex& p, const hp::Complex& z, const hp::Real& tol) {
    using hp::Complex;
    using hp::Real;
    const Real t = atan2(z.imag(), z.real());
    const Real beta(continuation_ray(static_cast<double>(t)));
    const Complex eib(cos(beta), sin(beta));
    const Complex pm1 = p - Complex(Real(1));
    const Complex i_beta(Real(0), beta);
    auto integrand = [&](Real u) -> Complex {
        if (u > Real("1e5")) return Complex(Real(0));  // e^{-u} negligible far beyond 50 digits
        Complex s = Complex(u) * eib;
        Complex ratio = s / z;
        return exp(pm1 * (Complex(log(u)) + i_beta) - s) / (Complex(Real(1)) + ratio * ratio) * eib;
    };
    Complex raw = integrate_half_line<Real>(integrand, tol);
    return raw * exp(-lgamma_hp(p));
}

std::complex<double> terminant_eval(const TerminantQuery& q, double rel_tol) {
    const double t = q.arg_z();
    if (std::abs(t) > 3 * kPi / 4 + 1e-12) {
        throw std::domain_error("terminant_eval: supported sector is |arg z| <= 3pi/4");
    }
    hp::Real tol = hp::Real(std::clamp(rel_tol, 1e-16, 1e-8)) * hp::Real("1e-20");
    return hp::to_double(terminant_eval_hp(hp::to_complex(q.p), hp::to_complex(q.z), tol));
}

TerminantBound bound_b1(const TerminantQuery& q) {
    TerminantBound out;
    out.proposition = Proposition::b1_csc;
    const double t = q.arg_z();
    if (!(std::abs(t) < kPi / 2)) return out;
    double ratio = gamma_ratio_abs(q.p);
    double factor = (std::abs(t) <= kPi / 4) ? 1.0 : std::abs(1.0 / std::sin(2 * t));
    out.sector_ok = true;
    out.bound = ratio * factor;
    return out;
}

TerminantBound bound_b2(const TerminantQuery& q) {
    TerminantBound out;
    out.proposition = Proposition::b2_halfplane_a;
    const double t = q.arg_z();
    if (!(std::abs(t) < kPi / 2)) return out;
    const double sgn = (t >= 0) ? 1.0 : -1.0;
    const double rp = q.p.real(), ip = q.p.imag();
    const double first = 0.5 * std::pow(1.0 / std::cos(t), rp) * std::max(1.0, std::exp(ip * (-sgn * kPi / 2 - t)));
    const double va = first + 0.5 * std::max(1.0, std::exp(ip * (sgn * kPi / 2 - t)));
    const double vb = first + 0.5 * gamma_ratio_abs(q.p);
    out.sector_ok = true;
    if (va <= vb) {
        out.bound = va;
        out.proposition = Proposition::b2_halfplane_a;
    } else {
        out.bound = vb;
        out.proposition = Proposition::b2_halfplane_b;
    }
    return out;
}

TerminantBound bound_b3(const TerminantQuery& q) {
    TerminantBound out;
    out.proposition = Proposition::b3_theta;
    const double t = q.arg_z();
    if (!q.p_is_real() || !(q.p.real() > 0) || !(std::abs(t) > kPi / 4 && std::abs(t) < kPi)) return out;
    const double p = q.p.real();

    double lo, hi;
    if (t > kPi / 4 && t < kPi / 2) {
        lo = 0.0;
        hi = t - kPi / 4;
    } else if (t >= kPi / 2 && t < 3 * kPi / 4) {
        lo = t - kPi / 2;
        hi = t - kPi / 4;
    } else if (t >= 3 * kPi / 4) {
        lo = t - kPi / 2;
        hi = kPi / 2;
    } else if (t > -kPi / 2 && t < -kPi / 4) {
        lo = t + kPi / 4;
        hi = 0.0;
    } else if (t > -3 * kPi / 4 && t <= -kPi / 2) {
        lo = t + kPi / 4;
        hi = t + kPi / 2;
    } else { // -pi < t <= -3pi/4
        lo = -kPi / 2;
        hi = t + kPi / 2;
    }

    auto eqn = [&](double th) { return (p + 2) * std::cos(2 * t - 3 * th) - (p - 2) * std::cos(2 * t - th); };
    const double eps = 1e-13 * (hi - lo);
    double a = lo + eps, b = hi - eps;
    double fa = eqn(a), fb = eqn(b);
    if (fa == 0.0) b = a;
    else if (fb == 0.0) a = b;
    else if (fa * fb > 0) throw std::runtime_error("bound_b3: theta root not bracketed (case misclassification)");
    for (int it = 0; it < 120 && b - a > 1e-17 * (1 + std::abs(a)); ++it) {
        double m = 0.5 * (a + b);
        double fm = eqn(m);
        if (fm == 0.0) {
            a = b = m;
            break;
        }
        if (fa * fm < 0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    const double theta = 0.5 * (a + b);
    out.sector_ok = true;
    out.theta = theta;
    out.bound = std::abs(1.0 / std::sin(2 * (t - theta))) / std::pow(std::cos(theta), p);
    return out;
}

TerminantBound bound_b4(const TerminantQuery& q) {
    TerminantBound out;
    out.proposition = Proposition::b4_chi_a;
    const double t = q.arg_z();
    if (!(std::abs(t) > kPi / 4 && std::abs(t) <= kPi / 2)) return out;
    const double sgn = (t > 0) ? 1.0 : -1.0;
    const double rp = q.p.real(), ip = q.p.imag();
    const double base = 0.5 + std::abs(q.p) / (2 * rp) * chi(rp) * std::max(1.0, std::exp(-ip * t));
    const double va = base + 0.5 * std::max(1.0, std::exp(ip * (sgn * kPi / 2 - t)));
    const double vb = base + 0.5 * gamma_ratio_abs(q.p);
    out.sector_ok = true;
    if (va <= vb) {
        out.bound = va;
        out.proposition = Proposition::b4_chi_a;
    } else {
        out.bound = vb;
        out.proposition = Proposition::b4_chi_b;
    }
    return out;
}

TerminantBound bound_b5(const TerminantQuery& q) {
    TerminantBound out;
    out.proposition = Proposition::b5_reflect;
    const double t = q.arg_z();
    if (!(std::abs(t) > kPi / 2 && std::abs(t) < kPi)) return out;
    const double sgn = (t > 0) ? 1.0 : -1.0;
    const double rp = q.p.real(), ip = q.p.imag();

    // Reflected argument lies in (-pi/2, 0) for t > 0, so b1/b2 apply there.
    const double tr = t - sgn * kPi;
    TerminantQuery qr(q.p, std::polar(std::abs(q.z), tr));
    TerminantBound r1 = bound_b1(qr), r2 = bound_b2(qr);
    double reflected = std::min(r1.bound.value(), r2.bound.value());

    const double pref = std::exp(ip * (sgn * kPi / 2 - t)) * gamma_ratio_abs(q.p) /
                        std::pow(std::abs(std::sin(t)), rp);
    const double v_sqrt = pref * std::sqrt(2 * kPi * rp) / 2 + reflected;
    const double v_chi = pref * chi(rp) + reflected;
    out.sector_ok = true;
    out.bound = std::min(v_sqrt, v_chi);
    return out;
}

TerminantBound best_bound(const TerminantQuery& q) {
    const double t = q.arg_z();
    if (!(std::abs(t) < kPi)) throw std::domain_error("best_bound: requires |arg z| < pi");
    TerminantBound best;
    auto consider = [&best](const TerminantBound& cand) {
        if (!cand.sector_ok) return;
        if (!best.sector_ok || *cand.bound < *best.bound) best = cand;
    };
    consider(bound_b1(q));
    consider(bound_b2(q));
    consider(bound_b4(q));
    consider(bound_b3(q));
    consider(bound_b5(q));
    return best;
}

} // namespace gentrig::terminant
