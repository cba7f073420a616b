#pragma once

#include "gentrig/precision.hpp"

#include <complex>
#include <optional>

namespace gentrig::terminant {

/// Which estimate produced a bound.  The *_a/_b suffixes distinguish the two
/// displayed variants of the half-plane and chi-form propositions (a: second
/// term max(1, e^{Im(p)(+-pi/2 - arg z)}); b: second term Gamma(Re p)/(2|Gamma(p)|)).
enum class Proposition {
    b1_csc,
    b2_halfplane_a,
    b2_halfplane_b,
    b3_theta,
    b4_chi_a,
    b4_chi_b,
    b5_reflect,
};

const char* proposition_name(Proposition p);

struct TerminantBound {
    bool sector_ok = false;
    std::optional<double> bound;  // present iff sector_ok
    Proposition proposition = Proposition::b1_csc;
    std::optional<double> theta;  // b3 only: the implicit-equation root, radians
};

/// Evaluation/bounding request for the basic terminant Pi_p(z).
struct TerminantQuery {
    std::complex<double> p;
    std::complex<double> z;

    TerminantQuery(std::complex<double> p_, std::complex<double> z_);
    double arg_z() const { return std::arg(z); }
    bool p_is_real() const { return p.imag() == 0.0; }
};

/// Pi_p(z) = (1/Gamma(p)) * int_0^inf s^{p-1} e^{-s} / (1 + (s/z)^2) ds,
/// continued to 3pi/8 < |arg z| <= 3pi/4 by rotating the integration ray to
/// arg s = sign(arg z) * 3pi/8 (the pole s = -iz stays >= pi/8 off the ray
/// and is never crossed during the rotation).  Relative accuracy is far
/// inside rel_tol; beyond |arg z| = 3pi/4 a std::domain_error is thrown.
std::complex<double> terminant_eval(const TerminantQuery& q, double rel_tol = 1e-13);

/// Extended-precision version used by the oracle-facing tests.
hp::Complex terminant_eval_hp(const hp::Complex& p, const hp::Complex& z, const hp::Real& tol);

/// |Pi_p(z)| <= Gamma(Re p)/|Gamma(p)| * {1, |csc(2 arg z)|} for |arg z| < pi/2.
TerminantBound bound_b1(const TerminantQuery& q);
/// Half-plane estimates (two variants, smaller returned) for |arg z| < pi/2.
TerminantBound bound_b2(const TerminantQuery& q);
/// Saddle-rotation estimate |csc(2(arg z - theta))| / cos^p(theta) for real
/// p > 0 and pi/4 < |arg z| < pi; theta solves
/// (p+2) cos(2 arg z - 3 theta) = (p-2) cos(2 arg z - theta) in a
/// case-dependent bracket and minimises the right-hand side.
TerminantBound bound_b3(const TerminantQuery& q);
/// chi-form estimates (two variants) for pi/4 < |arg z| <= pi/2.
TerminantBound bound_b4(const TerminantQuery& q);
/// Reflection estimate for pi/2 < |arg z| < pi, composed with the best of
/// bound_b1/bound_b2 at the reflected argument; both the chi and the
/// sqrt(2 pi Re p)/2 variants are computed and the smaller returned.
TerminantBound bound_b5(const TerminantQuery& q);

/// Minimum over all applicable propositions; ties prefer the cheaper
/// proposition in the order b1 < b2 < b4 < b3 < b5.
TerminantBound best_bound(const TerminantQuery& q);

/// Integration-ray angle used by the continued quadrature at the given arg z.
double continuation_ray(double arg_z);

} // namespace gentrig::terminant
