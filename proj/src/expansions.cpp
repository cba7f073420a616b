#include "gentrig/expansions.hpp"

#include "gentrig/coeffs.hpp"
#include "gentrig/oracle.hpp"
#include "gentrig/terminant.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gentrig::expansions {

namespace {

const double kPi = boost::math::constants::pi<double>();
constexpr unsigned kMaxOrder = 60;
using Cd = std::complex<double>;

bool is_real(const Cd& v) { return v.imag() == 0.0; }

/// First local minimum of |term_n|, n scanned upward, capped at kMaxOrder.
unsigned first_min_index(const std::vector<double>& mags) {
    unsigned best = 0;
    for (unsigned n = 0; n + 1 < mags.size(); ++n) {
        if (mags[n + 1] >= mags[n]) return n;
    }
    best = static_cast<unsigned>(mags.size() - 1);
    return best;
}

std::vector<double> term_magnitudes(const Cd& a, double zmag, Series s, unsigned nmax) {
    std::vector<double> mags;
    mags.reserve(nmax + 1);
    const Cd x = Cd(1.0, 0.0) - a;
    switch (s) {
        case Series::f: {
            Cd poch(1.0, 0.0);  // (1-a)_{2n}
            for (unsigned n = 0; n <= nmax; ++n) {
                mags.push_back(std::abs(poch) / std::pow(zmag, 2.0 * n));
                poch *= (x + Cd(2.0 * n)) * (x + Cd(2.0 * n + 1));
            }
            break;
        }
        case Series::g: {
            Cd poch = x;  // (1-a)_{2n+1}
            for (unsigned n = 0; n <= nmax; ++n) {
                mags.push_back(std::abs(poch) / std::pow(zmag, 2.0 * n + 1));
                poch *= (x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2));
            }
            break;
        }
        case Series::m2: {
            Cd poch = x;
            for (unsigned n = 0; n <= nmax; ++n) {
                mags.push_back(std::abs(poch / (Cd(n + 1.0) - a)) / std::pow(zmag, 2.0 * n + 1));
                poch *= (x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2));
            }
            break;
        }
        case Series::phi:
        case Series::x: {
            if (!is_real(a)) throw std::domain_error("optimal_order: phi/x series need real a");
            const long double xr = 1.0L - static_cast<long double>(a.real());
            std::vector<long double> cs = (s == Series::phi) ? coeffs::t_values(nmax, xr)
                                                             : coeffs::c_values(nmax, xr);
            for (unsigned n = 0; n <= nmax; ++n) {
                long double t = fabsl(cs[n]) / ((2.0L * n + 1) * powl(zmag, 2.0L * n + 1));
                mags.push_back(static_cast<double>(t));
            }
            break;
        }
    }
    return mags;
}

unsigned pick_order(const Cd& a, double zmag, Series s, const std::optional<unsigned>& requested,
                    Truncation& mode) {
    if (requested) {
        mode = Truncation::requested;
        if (*requested > kMaxOrder) throw std::domain_error("truncation order capped at 60");
        return *requested;
    }
    mode = Truncation::optimal;
    return first_min_index(term_magnitudes(a, zmag, s, kMaxOrder));
}

std::optional<double> terminant_bound_factor(const Cd& p, const Cd& z) {
    const double t = std::arg(z);
    if (!(std::abs(t) < kPi)) return std::nullopt;
    terminant::TerminantBound tb = terminant::best_bound(terminant::TerminantQuery(p, z));
    if (!tb.sector_ok) return std::nullopt;
    return tb.bound;
}

std::optional<RemainderSign> parity_sign(int exponent_parity) {
    return exponent_parity % 2 == 0 ? RemainderSign::remainder_positive
                                    : RemainderSign::remainder_negative;
}

} // namespace

unsigned optimal_order(double a, double z_mag, Series series) {
    if (!(z_mag > 0)) throw std::domain_error("optimal_order: requires |z| > 0");
    return first_min_index(term_magnitudes(Cd(a), z_mag, series, kMaxOrder));
}

CertifiedValue f_expand(const EvalRequest& req) {
    const Cd a = req.a, z = req.z;
    if (z == Cd()) throw std::domain_error("f_expand: z must be nonzero");
    Truncation mode;
    const unsigned N = pick_order(a, std::abs(z), Series::f, req.order, mode);

    const Cd x = Cd(1.0) - a;
    const Cd inv_z2 = Cd(1.0) / (z * z);
    Cd sum(0.0), term(1.0), poch(1.0);
    for (unsigned n = 0; n < N; ++n) {
        sum += term;
        poch *= (x + Cd(2.0 * n)) * (x + Cd(2.0 * n + 1));
        term *= -(x + Cd(2.0 * n)) * (x + Cd(2.0 * n + 1)) * inv_z2;
    }
    const Cd za1 = std::pow(z, a - Cd(1.0));

    CertifiedValue out;
    out.value = za1 * sum;
    out.terms_used = N;
    out.truncation = mode;
    if (2.0 * N + 1.0 > a.real()) {
        if (poch == Cd(0.0)) {
            out.error_bound = 0.0;
        } else {
            const Cd p = Cd(2.0 * N + 1.0) - a;
            if (auto bb = terminant_bound_factor(p, z)) {
                out.error_bound = std::abs(za1) * std::abs(poch) / std::pow(std::abs(z), 2.0 * N) * *bb;
            }
        }
        if (is_real(a) && is_real(z) && z.real() > 0) out.sign_certificate = parity_sign(N);
    }
    return out;
}

CertifiedValue g_expand(const EvalRequest& req) {
    const Cd a = req.a, z = req.z;
    if (z == Cd()) throw std::domain_error("g_expand: z must be nonzero");
    Truncation mode;
    const unsigned N = pick_order(a, std::abs(z), Series::g, req.order, mode);

    const Cd x = Cd(1.0) - a;
    const Cd inv_z2 = Cd(1.0) / (z * z);
    Cd sum(0.0), term = x / z, poch = x;
    for (unsigned n = 0; n < N; ++n) {
        sum += term;
        poch *= (x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2));
        term *= -(x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2)) * inv_z2;
    }
    const Cd za1 = std::pow(z, a - Cd(1.0));

    CertifiedValue out;
    out.value = za1 * sum;
    out.terms_used = N;
    out.truncation = mode;
    if (2.0 * N + 2.0 > a.real()) {
        if (poch == Cd(0.0)) {
            out.error_bound = 0.0;
        } else {
            const Cd p = Cd(2.0 * N + 2.0) - a;
            if (auto bb = terminant_bound_factor(p, z)) {
                out.error_bound =
                    std::abs(za1) * std::abs(poch) / std::pow(std::abs(z), 2.0 * N + 1) * *bb;
            }
        }
        if (is_real(a) && is_real(z) && z.real() > 0) out.sign_certificate = parity_sign(N);
    }
    return out;
}

CertifiedValue m2_expand(const EvalRequest& req) {
    const Cd a = req.a, z = req.z;
    if (z == Cd()) throw std::domain_error("m2_expand: z must be nonzero");
    if (!(std::abs(std::arg(z)) < kPi)) throw std::domain_error("m2_expand: requires |arg z| < pi");
    Truncation mode;
    const unsigned N = pick_order(a, std::abs(z), Series::m2, req.order, mode);

    const Cd x = Cd(1.0) - a;
    const Cd inv_z2 = Cd(1.0) / (z * z);
    Cd sum(0.0), gterm = x / z, poch = x;
    for (unsigned n = 0; n < N; ++n) {
        sum += gterm / (Cd(n + 1.0) - a);
        poch *= (x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2));
        gterm *= -(x + Cd(2.0 * n + 1)) * (x + Cd(2.0 * n + 2)) * inv_z2;
    }
    const Cd z2a1 = std::pow(z, Cd(2.0) * a - Cd(1.0));

    CertifiedValue out;
    out.value = z2a1 * sum;
    out.terms_used = N;
    out.truncation = mode;
    if (N + 1.0 > a.real()) {
        if (poch == Cd(0.0)) {
            out.error_bound = 0.0;
        } else {
            const Cd p = Cd(2.0 * N + 2.0) - a;
            if (auto bb = terminant_bound_factor(p, z)) {
                out.error_bound = std::abs(z2a1) * std::abs(poch) /
                                  ((N + 1.0 - a.real()) * std::pow(std::abs(z), 2.0 * N + 1)) * *bb;
            }
        }
        if (is_real(a) && is_real(z) && z.real() > 0) out.sign_certificate = parity_sign(N);
    }
    return out;
}

CertifiedValue phi_expand(const EvalRequest& req) {
    if (!is_real(req.a)) throw std::domain_error("phi_expand: requires real a");
    const double a = req.a.real();
    const Cd z = req.z;
    if (!(a < 1)) throw std::domain_error("phi_expand: requires a < 1");
    if (!(z.real() > 0)) throw std::domain_error("phi_expand: requires Re z > 0");
    Truncation mode;
    const unsigned N = pick_order(req.a, std::abs(z), Series::phi, req.order, mode);

    const double x = 1 - a;
    Cd sum = z + Cd(kPi / 2);
    Cd zp = z;
    for (unsigned n = 0; n < N; ++n) {
        const double tn = coeffs::eval_poly(coeffs::t_poly(n), x);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        sum -= Cd(sgn * tn / (2.0 * n + 1)) / zp;
        zp *= z * z;
    }

    CertifiedValue out;
    out.value = sum;
    out.terms_used = N;
    out.truncation = mode;
    const double t = std::arg(z);
    const double tN = coeffs::eval_poly(coeffs::t_poly(N), x);
    const double factor = (std::abs(t) <= kPi / 4) ? 1.0 : std::abs(1.0 / std::sin(2 * t));
    out.error_bound = tN / (2.0 * N + 1) / std::pow(std::abs(z), 2.0 * N + 1) * factor;
    if (is_real(z) && z.real() > 0) out.sign_certificate = parity_sign(N + 1);
    return out;
}

CertifiedValue ti_expand(const EvalRequest& req) {
    if (!(req.alpha >= 0 && req.alpha < 1)) throw std::domain_error("ti_expand: alpha in [0,1)");
    CertifiedValue f = f_expand(req);
    CertifiedValue g = g_expand(req);
    const Cd ph = req.z - Cd(kPi * req.alpha);
    const Cd s = std::sin(ph), c = std::cos(ph);

    CertifiedValue out;
    out.value = -f.value * s + g.value * c;
    out.terms_used = std::max(f.terms_used, g.terms_used);
    out.truncation = f.truncation;
    if (f.error_bound && g.error_bound) {
        out.error_bound = std::abs(s) * *f.error_bound + std::abs(c) * *g.error_bound;
    }
    return out;
}

CertifiedValue si_expand(EvalRequest req) {
    req.alpha = 0.5;
    return ti_expand(req);
}

CertifiedValue ci_expand(EvalRequest req) {
    req.alpha = 0.0;
    return ti_expand(req);
}

FresnelResult fresnel(std::complex<double> z) {
    // S and C are odd and F(z) = (1+i)/2 - (C(z) + i S(z)); reduce to
    // Re z >= 0 by parity.
    bool flipped = false;
    Cd zz = z;
    if (zz.real() < 0 || (zz.real() == 0 && zz.imag() < 0)) {
        zz = -zz;
        flipped = true;
    }
    const Cd w = Cd(kPi / 2) * zz * zz;
    const double wmag = std::abs(w);
    const double warg = std::arg(w);

    Cd si, ci;
    if (wmag >= 30.0 && std::abs(warg) <= 3 * kPi / 4) {
        EvalRequest r;
        r.a = Cd(0.5);
        r.z = w;
        si = si_expand(r).value;
        ci = ci_expand(r).value;
    } else {
        if (wmag > 80.0) throw std::domain_error("fresnel: unsupported sector (|arg z| near pi/2 with large |z|)");
        // arg(z^2) tracked without wrapping: 2*arg(zz) stays in [-pi, pi]
        // because Re zz >= 0.
        const hp::Real m(wmag);
        const hp::Real ang(2 * std::arg(zz));
        auto sc = oracle::si_ci_series_hp(hp::Real(0.5), hp::polar(m, static_cast<hp::Real>(ang)));
        si = hp::to_double(sc.first);
        ci = hp::to_double(sc.second);
    }

    const double root2pi = std::sqrt(2 * kPi);
    Cd S = Cd(0.5) - si / root2pi;
    Cd C = Cd(0.5) - ci / root2pi;
    if (flipped) {
        S = -S;
        C = -C;
    }
    FresnelResult out;
    out.S = S;
    out.C = C;
    out.F = Cd(0.5, 0.5) - (C + Cd(0, 1) * S);
    return out;
}

} // namespace gentrig::expansions
