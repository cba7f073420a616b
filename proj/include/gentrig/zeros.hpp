#pragma once

#include "gentrig/expansions.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace gentrig::zeros {

/// One indexed positive zero z_kappa(a) of ti(a, z, alpha), kappa = k + alpha.
struct ZeroRecord {
    double a = 0;
    double alpha = 0;
    long k = 0;
    double kappa = 0;
    double seed = 0;                    // inverse-series estimate X(a, pi kappa)
    std::optional<double> seed_bound;   // certified radius at w = pi kappa (absent: scan fallback)
    std::optional<double> refined;      // Newton-refined root
    std::optional<double> residual;     // |ti(a, refined, alpha)|
};

/// Inverse-phase series X(a,w) = w + sum_{n<N} (-1)^n c_n(1-a)/((2n+1) w^{2n+1})
/// with its certified remainder bound for Re w > 0.
expansions::CertifiedValue x_expand(double a, std::complex<double> w, std::optional<unsigned> order);

/// Smallest admissible index: least integer k with k + alpha > (a+|a|-2)/4.
long first_index(double a, double alpha);

/// Asymptotic seed plus its certificate.  Falls back to a dense scan plus
/// bisection (seed_bound absent) when the certified radius exceeds 1.
ZeroRecord zero_seed(double a, double alpha, long k);

/// Newton refinement against the oracle, derivative -z^{a-1} cos(z - pi alpha).
/// Flags a certificate violation if the refined root leaves the seed radius.
ZeroRecord zero_refine(const ZeroRecord& rec);

/// pi kappa < z_kappa(a) < pi kappa + (c0(1-a)/(pi kappa)) * 2/(1 + sqrt(1 + 4(1-a)/(pi kappa)^2)),
/// stated for the si (alpha = 1/2) and ci (alpha = 0) cases.
std::pair<double, double> literature_bracket(double a, double alpha, long k);

std::vector<ZeroRecord> enumerate(double a, double alpha, long k_from, long k_to, bool refine);

/// Sign-change count of ti(a, ., alpha) on (0, zmax] by dense sampling.
long count_zeros_scan(double a, double alpha, double zmax);
/// Zero count on (0, zmax] predicted by the phase: #{k : kcond holds and z_k <= zmax}.
long count_zeros_phase(double a, double alpha, double zmax);

} // namespace gentrig::zeros
