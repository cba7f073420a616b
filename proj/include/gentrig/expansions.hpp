#pragma once

#include <complex>
#include <optional>

namespace gentrig::expansions {

enum class Truncation { requested, optimal };

/// Real-axis enveloping certificate: the sign of the exact remainder.
enum class RemainderSign { remainder_positive, remainder_negative };

/// A floating evaluation paired with a rigorous remainder-bound radius.
struct CertifiedValue {
    std::complex<double> value;
    std::optional<double> error_bound;  // absent when no theorem precondition holds
    unsigned terms_used = 0;            // truncation order N
    Truncation truncation = Truncation::requested;
    std::optional<RemainderSign> sign_certificate;
};

struct EvalRequest {
    std::complex<double> a;
    std::complex<double> z;
    std::optional<unsigned> order;  // nullopt = optimal truncation
    double alpha = 0.0;             // ti assembly only, in [0, 1)
};

enum class Series { f, g, m2, phi, x };

/// Truncation order minimising the magnitude of the N-th series term
/// (first local minimum scanning upward, hard cap N <= 60).
unsigned optimal_order(double a, double z_mag, Series series);

/// z^{a-1} sum_{n<N} (-1)^n (1-a)_{2n} / z^{2n}, remainder bounded through
/// the basic terminant of order 2N+1-a.
CertifiedValue f_expand(const EvalRequest& req);
/// z^{a-1} sum_{n<N} (-1)^n (1-a)_{2n+1} / z^{2n+1}; terminant order 2N+2-a.
CertifiedValue g_expand(const EvalRequest& req);
/// z^{2a-1} sum_{n<N} (-1)^n (1-a)_{2n+1} / ((n+1-a) z^{2n+1}); the
/// sup_{r>=1} of the terminant bound is exact because every applicable
/// bound depends only on arg z and the order.
CertifiedValue m2_expand(const EvalRequest& req);
/// z + pi/2 - sum_{n<N} (-1)^n t_n(1-a) / ((2n+1) z^{2n+1}) for real a < 1,
/// Re z > 0; bound factor 1 (|arg z| <= pi/4) or |csc(2 arg z)|.
CertifiedValue phi_expand(const EvalRequest& req);
/// ti = -f sin(z - pi alpha) + g cos(z - pi alpha), bounds combined with
/// the trigonometric weights.
CertifiedValue ti_expand(const EvalRequest& req);
CertifiedValue si_expand(EvalRequest req);  // alpha = 1/2
CertifiedValue ci_expand(EvalRequest req);  // alpha = 0

struct FresnelResult {
    std::complex<double> F;  // int_z^inf e^{i pi t^2 / 2} dt
    std::complex<double> S;
    std::complex<double> C;
};

/// Fresnel integrals through the a = 1/2 reductions
///   S(z) = 1/2 - si(1/2, pi z^2/2)/sqrt(2 pi),
///   C(z) = 1/2 - ci(1/2, pi z^2/2)/sqrt(2 pi);
/// asymptotic route for |pi z^2/2| >= 30, incomplete-gamma series otherwise.
FresnelResult fresnel(std::complex<double> z);

} // namespace gentrig::expansions
