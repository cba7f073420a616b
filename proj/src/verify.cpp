#include "gentrig/verify.hpp"

#include "gentrig/coeffs.hpp"
#include "gentrig/expansions.hpp"
#include "gentrig/gammafn.hpp"
#include "gentrig/oracle.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/terminant.hpp"
#include "gentrig/zeros.hpp"

#include <boost/math/constants/constants.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gentrig::verify {

namespace {

const double kPi = boost::math::constants::pi<double>();
using Cd = std::complex<double>;
using hp::Complex;
using hp::Real;

const Real kOracleTol("1e-30");

struct Recorder {
    VerifyReport report;
    void check(bool ok, const std::function<std::string()>& describe) {
        ++report.cases_run;
        if (!ok) {
            ++report.cases_failed;
            if (report.failures.size() < 50) report.failures.push_back(describe());
        }
    }
    void margin(double m) {
        if (m < report.worst_margin) report.worst_margin = m;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// --- hp partial sums of the four real-axis series -------------------------

struct PartialSum {
    Real sum;        // normalised partial sum (prefactor removed)
    Real next_term;  // magnitude of the first neglected term
};

PartialSum f_partial(const Real& x, const Real& z, unsigned N) {
    Real sum = 0, term = 1;
    for (unsigned n = 0; n < N; ++n) {
        sum += term;
        term *= -(x + 2 * n) * (x + 2 * n + 1) / (z * z);
    }
    return {sum, abs(term)};
}

PartialSum g_partial(const Real& x, const Real& z, unsigned N) {
    Real sum = 0, term = x / z;
    for (unsigned n = 0; n < N; ++n) {
        sum += term;
        term *= -(x + 2 * n + 1) * (x + 2 * n + 2) / (z * z);
    }
    return {sum, abs(term)};
}

PartialSum m2_partial(const Real& x, const Real& z, unsigned N) {
    Real a = 1 - x;
    Real sum = 0, gterm = x / z, poch = x;
    for (unsigned n = 0; n < N; ++n) {
        sum += gterm / (Real(n + 1) - a);
        poch *= (x + 2 * n + 1) * (x + 2 * n + 2);
        gterm *= -(x + 2 * n + 1) * (x + 2 * n + 2) / (z * z);
    }
    return {sum, abs(gterm / (Real(N + 1) - a))};
}

PartialSum phi_partial(const Real& x, const Real& z, unsigned N) {
    Real sum = z + hp::pi() / 2;
    Real zp = z;
    for (unsigned n = 0; n < N; ++n) {
        Real tn = coeffs::t_poly(n).eval<Real>(x);
        Real sgn = (n % 2 == 0) ? 1 : -1;
        sum -= sgn * tn / ((2 * n + 1) * zp);
        zp *= z * z;
    }
    Real next = coeffs::t_poly(N).eval<Real>(x) / ((2 * N + 1) * zp);
    return {sum, next};
}

PartialSum x_partial(const Real& x, const Real& w, unsigned N) {
    Real sum = w;
    Real wp = w;
    for (unsigned n = 0; n < N; ++n) {
        Real cn = coeffs::c_poly(n).eval<Real>(x);
        Real sgn = (n % 2 == 0) ? 1 : -1;
        sum += sgn * cn / ((2 * n + 1) * wp);
        wp *= w * w;
    }
    Real next = coeffs::c_poly(N).eval<Real>(x) / ((2 * N + 1) * wp);
    return {sum, next};
}

// --- small oracle caches ---------------------------------------------------

struct OracleCache {
    std::map<std::pair<double, double>, oracle::PhasePointHP> real_points;
    std::map<std::pair<double, std::pair<double, double>>, oracle::FGPairHP> cplx_points;
    std::map<std::pair<double, double>, Real> inversions;

    const oracle::PhasePointHP& real_point(double a, double z) {
        auto key = std::make_pair(a, z);
        auto it = real_points.find(key);
        if (it == real_points.end()) {
            it = real_points.emplace(key, oracle::phase_modulus_hp(Real(a), Real(z), kOracleTol)).first;
        }
        return it->second;
    }
    const oracle::FGPairHP& cplx_point(double a, Cd z) {
        auto key = std::make_pair(a, std::make_pair(z.real(), z.imag()));
        auto it = cplx_points.find(key);
        if (it == cplx_points.end()) {
            it = cplx_points.emplace(key, oracle::f_g_quadrature_hp(Complex(Real(a)), hp::to_complex(z), kOracleTol)).first;
        }
        return it->second;
    }
    const Real& inversion(double a, double w) {
        auto key = std::make_pair(a, w);
        auto it = inversions.find(key);
        if (it == inversions.end()) {
            it = inversions.emplace(key, oracle::invert_phase_hp(Real(a), Real(w), kOracleTol)).first;
        }
        return it->second;
    }
};

// --- suites ----------------------------------------------------------------

void run_tables(const GridConfig& cfg, Recorder& rec) {
    // Reference rows for n <= 5, exact integer/rational coefficients,
    // ascending powers starting at x^1.
    using Row = std::vector<Rational>;
    auto R = [](long n, long d = 1) { return Rational(n, d); };
    const std::vector<Row> tref = {
        {R(1)},
        {R(6), R(6), R(1)},
        {R(120), R(210), R(110), R(20), R(1)},
        {R(5040), R(11256), R(8946), R(3248), R(560), R(42), R(1)},
        {R(362880), R(930960), R(920184), R(463050), R(129834), R(20580), R(1764), R(72), R(1)},
        {R(39916800), R(112289760), R(127178832), R(77504328), R(28332282), R(6494092), R(939774),
         R(83688), R(4290), R(110), R(1)},
    };
    const std::vector<Row> cref = {
        {R(1)},
        {R(6), R(9), R(1)},
        {R(120), R(250), R(160), R(80, 3), R(1)},
        {R(5040), R(12348), R(11088), R(4529), R(791), R(791, 15), R(1)},
        {R(362880), R(986256), R(1052520), R(578466), R(176016), R(144924, 5), R(11996, 5),
         R(3048, 35), R(1)},
        {R(39916800), R(116915040), R(139585512), R(271612924, 3), R(35393952), R(8635462),
         R(3907442, 3), R(2439712, 21), R(356092, 63), R(40843, 315), R(1)},
    };
    auto check_poly = [&](const RationalPolynomial& p, const Row& want, const char* tag, unsigned n) {
        bool ok = p.degree() == want.size() && p.constant_term() == 0;
        if (ok) {
            for (std::size_t i = 0; i < want.size(); ++i) ok = ok && p[i + 1] == want[i];
        }
        rec.check(ok, [=] { return std::string(tag) + "_" + std::to_string(n) + " mismatch"; });
    };
    unsigned nmax = std::min(cfg.table_nmax, 5u);
    for (unsigned n = 0; n <= nmax; ++n) check_poly(coeffs::t_poly(n), tref[n], "t", n);
    for (unsigned n = 0; n <= nmax; ++n) check_poly(coeffs::c_poly(n), cref[n], "c", n);
}

void run_envelope(const GridConfig& cfg, Recorder& rec) {
    OracleCache cache;
    for (double a : cfg.a_values) {
        const Real x = Real(1) - Real(a);
        for (double zr : cfg.z_real) {
            const auto& pt = cache.real_point(a, zr);
            const Real z(zr);
            const Real fa = pt.f / pow(z, Real(a) - 1);
            const Real ga = pt.g / pow(z, Real(a) - 1);
            const Real m2a = pt.m2 / pow(z, 2 * Real(a) - 1);
            for (unsigned N = cfg.n_min; N <= cfg.n_max; ++N) {
                auto env = [&](const char* tag, const PartialSum& ps, const Real& truth, int sign_parity) {
                    Real rem = truth - ps.sum;
                    bool sign_ok = (sign_parity % 2 == 0) ? (rem > 0) : (rem < 0);
                    bool mag_ok = abs(rem) < ps.next_term;
                    rec.check(sign_ok && mag_ok, [=] {
                        return std::string("envelope ") + tag + " a=" + fmt(a) + " z=" + fmt(zr) +
                               " N=" + std::to_string(N);
                    });
                    if (ps.next_term > 0) rec.margin(static_cast<double>((ps.next_term - abs(rem)) / ps.next_term));
                };
                if (2 * N + 1 > a) env("f", f_partial(x, z, N), fa, N);
                if (2 * N + 2 > a) env("g", g_partial(x, z, N), ga, N);
                if (N + 1 > a) env("m2", m2_partial(x, z, N), m2a, N);
                env("phi", phi_partial(x, z, N), pt.phi, N + 1);
            }
            // X envelope at w = phi - pi/2 region: use w = z as a generic positive point.
            const Real w(zr);
            const Real xinv = cache.inversion(a, zr);
            for (unsigned N = cfg.n_min; N <= std::min(cfg.n_max, 6u); ++N) {
                PartialSum ps = x_partial(x, w, N);
                Real rem = xinv - ps.sum;
                bool sign_ok = (N % 2 == 0) ? (rem > 0) : (rem < 0);
                bool mag_ok = abs(rem) < ps.next_term;
                rec.check(sign_ok && mag_ok, [=] {
                    return std::string("envelope x a=") + fmt(a) + " w=" + fmt(zr) + " N=" + std::to_string(N);
                });
                if (ps.next_term > 0) rec.margin(static_cast<double>((ps.next_term - abs(rem)) / ps.next_term));
            }
        }
    }
}

void run_bounds(const GridConfig& cfg, Recorder& rec) {
    OracleCache cache;
    auto enclosure = [&](const char* tag, const expansions::CertifiedValue& cv, const Complex& truth,
                         double a, Cd z, unsigned N) {
        if (!cv.error_bound) return;
        Real err = abs(hp::to_complex(cv.value) - truth);
        bool ok = err <= Real(*cv.error_bound) * (1 + Real("1e-12")) + Real("1e-300");
        rec.check(ok, [=] {
            return std::string("enclosure ") + tag + " a=" + fmt(a) + " z=(" + fmt(z.real()) + "," +
                   fmt(z.imag()) + ") N=" + std::to_string(N) + " err=" + fmt(static_cast<double>(err)) +
                   " bound=" + fmt(*cv.error_bound);
        });
        if (*cv.error_bound > 0) {
            rec.margin(static_cast<double>((Real(*cv.error_bound) - err) / Real(*cv.error_bound)));
        }
    };

    std::vector<Cd> zs;
    for (double zr : cfg.z_real) zs.emplace_back(zr, 0.0);
    for (double m : cfg.z_mags)
        for (double t : cfg.z_args) zs.push_back(std::polar(m, t));

    for (double a : cfg.a_values) {
        for (const Cd& z : zs) {
            Complex fo, go;
            if (z.imag() == 0.0) {
                const auto& pt = cache.real_point(a, z.real());
                fo = Complex(pt.f);
                go = Complex(pt.g);
            } else {
                const auto& fg = cache.cplx_point(a, z);
                fo = fg.f;
                go = fg.g;
            }
            Complex m2o = fo * fo + go * go;
            for (unsigned N = cfg.n_min; N <= cfg.n_max; ++N) {
                expansions::EvalRequest req{Cd(a), z, N, 0.0};
                enclosure("f", expansions::f_expand(req), fo, a, z, N);
                enclosure("g", expansions::g_expand(req), go, a, z, N);
                enclosure("m2", expansions::m2_expand(req), m2o, a, z, N);
            }
            // phi / x enclosures
            Complex phio = (z.imag() == 0.0) ? Complex(cache.real_point(a, z.real()).phi)
                                             : oracle::phase_complex_hp(Real(a), hp::to_complex(z), kOracleTol);
            Complex xo = (z.imag() == 0.0)
                             ? Complex(cache.inversion(a, z.real()))
                             : oracle::invert_phase_complex_hp(Real(a), hp::to_complex(z), kOracleTol);
            for (unsigned N = cfg.n_min; N <= std::min(cfg.n_max, 6u); ++N) {
                expansions::EvalRequest req{Cd(a), z, N, 0.0};
                enclosure("phi", expansions::phi_expand(req), phio, a, z, N);
                enclosure("x", zeros::x_expand(a, z, N), xo, a, z, N);
            }
        }
    }
}

void run_zeros(const GridConfig& cfg, Recorder& rec) {
    for (double a : cfg.a_values) {
        if (!(a < 1)) continue;
        for (double alpha : cfg.alpha_values) {
            for (long k = cfg.k_from; k <= cfg.k_to; ++k) {
                if (!(static_cast<double>(k) + alpha > (a + std::abs(a) - 2) / 4)) continue;
                zeros::ZeroRecord rec0 = zeros::zero_seed(a, alpha, k);
                zeros::ZeroRecord ref = zeros::zero_refine(rec0);
                bool contained = !rec0.seed_bound ||
                                 std::abs(*ref.refined - rec0.seed) <= *rec0.seed_bound + 1e-12;
                rec.check(contained, [=] {
                    return "zero certificate a=" + fmt(a) + " alpha=" + fmt(alpha) + " k=" + std::to_string(k);
                });
                if (rec0.seed_bound && *rec0.seed_bound > 0) {
                    rec.margin((*rec0.seed_bound - std::abs(*ref.refined - rec0.seed)) / *rec0.seed_bound);
                }
                double phi = oracle::phase_modulus(a, *ref.refined).phi;
                double want = kPi * (static_cast<double>(k) + alpha + 0.5);
                rec.check(std::abs(phi - want) < 1e-10, [=] {
                    return "zero phase a=" + fmt(a) + " alpha=" + fmt(alpha) + " k=" + std::to_string(k);
                });
                if (alpha == 0.0 || alpha == 0.5) {
                    auto [lo, hi] = zeros::literature_bracket(a, alpha, k);
                    rec.check(lo < *ref.refined && *ref.refined < hi, [=] {
                        return "zero bracket a=" + fmt(a) + " alpha=" + fmt(alpha) + " k=" + std::to_string(k);
                    });
                }
            }
            long scan = zeros::count_zeros_scan(a, alpha, cfg.zero_scan_max);
            long phase = zeros::count_zeros_phase(a, alpha, cfg.zero_scan_max);
            rec.check(scan == phase, [=] {
                return "zero count a=" + fmt(a) + " alpha=" + fmt(alpha) + " scan=" + std::to_string(scan) +
                       " phase=" + std::to_string(phase);
            });
        }
    }
}

void run_identities(const GridConfig& cfg, Recorder& rec) {
    const Real h("1e-5");
    for (double a : cfg.a_values) {
        if (!(a < 1)) continue;
        for (double zr : cfg.z_real) {
            const Real z(zr);
            auto p0 = oracle::phase_modulus_hp(Real(a), z, kOracleTol);
            auto pp = oracle::phase_modulus_hp(Real(a), z + h, kOracleTol);
            auto pm = oracle::phase_modulus_hp(Real(a), z - h, kOracleTol);
            const Real za1 = pow(z, Real(a) - 1);

            // M^2 against the independent incomplete-gamma modulus route.
            Complex g1 = oracle::incomplete_gamma_upper_hp(
                Real(a), hp::polar(z, -hp::pi() / 2), kOracleTol);
            Real m2_indep = abs(g1) * abs(g1);
            rec.check(abs(m2_indep - p0.m2) <= Real("1e-12") * p0.m2, [=] {
                return "identity M2=f2+g2 a=" + fmt(a) + " z=" + fmt(zr);
            });

            // f' = -g
            Real lhs = (pp.f - pm.f) / (2 * h);
            rec.check(abs(lhs + p0.g) <= Real("1e-6") * abs(p0.g), [=] {
                return "identity f'=-g a=" + fmt(a) + " z=" + fmt(zr);
            });
            // g' = f - z^{a-1}
            lhs = (pp.g - pm.g) / (2 * h);
            rec.check(abs(lhs - (p0.f - za1)) <= Real("1e-6") * (abs(p0.f) + za1), [=] {
                return "identity g'=f-z^{a-1} a=" + fmt(a) + " z=" + fmt(zr);
            });
            // (M^2)' = -2 z^{a-1} g
            lhs = (pp.m2 - pm.m2) / (2 * h);
            rec.check(abs(lhs + 2 * za1 * p0.g) <= Real("1e-6") * abs(2 * za1 * p0.g), [=] {
                return "identity (M2)'=-2z^{a-1}g a=" + fmt(a) + " z=" + fmt(zr);
            });
            // phi' = z^{a-1} f / M^2
            lhs = (pp.phi - pm.phi) / (2 * h);
            Real rhs = za1 * p0.f / p0.m2;
            rec.check(abs(lhs - rhs) <= Real("1e-6") * abs(rhs), [=] {
                return "identity phi'=z^{a-1}f/M2 a=" + fmt(a) + " z=" + fmt(zr);
            });
            // round trip X(a, Phi(a,z)) = z
            Real w = p0.phi - hp::pi() / 2;
            Real back = oracle::invert_phase_hp(Real(a), w, kOracleTol);
            rec.check(abs(back - z) <= Real("1e-10") * (1 + abs(z)), [=] {
                return "identity roundtrip a=" + fmt(a) + " z=" + fmt(zr);
            });
            // ti = M cos(phi - pi alpha)
            for (double alpha : cfg.alpha_values) {
                Real ti = oracle::ti_real_hp(Real(a), z, Real(alpha), kOracleTol);
                Real rhs2 = sqrt(p0.m2) * cos(p0.phi - hp::pi() * alpha);
                rec.check(abs(ti - rhs2) <= Real("1e-11") * (1 + abs(rhs2)), [=] {
                    return "identity ti=Mcos a=" + fmt(a) + " z=" + fmt(zr) + " alpha=" + fmt(alpha);
                });
            }
        }
    }
}

void run_terminant(const GridConfig& cfg, Recorder& rec) {
    (void)cfg;
    // 0 < Pi_p(z) < 1 on the positive axis.
    for (double p : {0.5, 1.0, 2.0, 5.0}) {
        for (double zv : {1.0, 5.0, 20.0}) {
            terminant::TerminantQuery q{Cd(p), Cd(zv)};
            Cd v = terminant::terminant_eval(q);
            rec.check(v.real() > 0 && v.real() < 1 && std::abs(v.imag()) < 1e-13, [=] {
                return "terminant positivity p=" + fmt(p) + " z=" + fmt(zv);
            });
        }
    }
    // |Pi| <= best bound across the supported sector, real and complex p.
    std::vector<Cd> pvals = {Cd(0.5), Cd(1), Cd(2), Cd(5), Cd(1, 1), Cd(2, -0.5), Cd(0.5, 2)};
    for (const Cd& p : pvals) {
        for (double frac : {-0.74, -0.625, -0.5, -0.375, -0.25, -0.125, 0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.74}) {
            if (p.imag() != 0.0 && std::abs(frac) > 0.5) continue;
            for (double m : {2.0, 8.0}) {
                Cd z = std::polar(m, kPi * frac);
                terminant::TerminantQuery q(p, z);
                double v = std::abs(terminant::terminant_eval(q));
                auto bb = terminant::best_bound(q);
                bool ok = bb.sector_ok && v <= *bb.bound * (1 + 1e-10);
                rec.check(ok, [=] {
                    return "terminant bound p=(" + fmt(p.real()) + "," + fmt(p.imag()) + ") arg=" +
                           fmt(kPi * frac) + " |z|=" + fmt(m);
                });
                if (bb.sector_ok && *bb.bound > 0) rec.margin((*bb.bound - v) / *bb.bound);
            }
        }
    }
    // B3 residual and theta-grid minimality.
    for (double p : {1.0, 2.0, 4.0}) {
        for (double frac : {0.3, 0.45, 0.55, 0.6, 0.74, 0.8, 0.9, -0.35, -0.6, -0.8}) {
            double t = kPi * frac;
            terminant::TerminantQuery q(Cd(p), std::polar(1.0, t));
            auto b3 = terminant::bound_b3(q);
            if (!b3.sector_ok) continue;
            double th = *b3.theta;
            double resid = std::abs((p + 2) * std::cos(2 * t - 3 * th) - (p - 2) * std::cos(2 * t - th));
            rec.check(resid < 1e-12, [=] { return "B3 residual p=" + fmt(p) + " arg=" + fmt(t); });
            // theta minimises the bound over its bracket
            bool minimal = true;
            for (int i = 1; i <= 64; ++i) {
                double thi = th + (i - 32.5) * 1e-3;
                double cand = std::abs(1.0 / std::sin(2 * (t - thi))) / std::pow(std::cos(thi), p);
                if (cand < *b3.bound * (1 - 1e-9)) minimal = false;
            }
            rec.check(minimal, [=] { return "B3 minimality p=" + fmt(p) + " arg=" + fmt(t); });
        }
    }
    // Watson bracket for chi.
    for (double p = 0.5; p <= 50.0; p += 2.47) {
        double c = chi(p);
        rec.check(chi_watson_lower(p) < c && c < chi_watson_upper(p),
                  [=] { return "watson bracket p=" + fmt(p); });
    }
}

} // namespace

Suite suite_from_string(const std::string& name) {
    if (name == "tables") return Suite::tables;
    if (name == "envelope") return Suite::envelope;
    if (name == "bounds") return Suite::bounds;
    if (name == "zeros") return Suite::zeros;
    if (name == "identities") return Suite::identities;
    if (name == "terminant") return Suite::terminant;
    throw std::invalid_argument("unknown suite: " + name);
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::tables: return "tables";
        case Suite::envelope: return "envelope";
        case Suite::bounds: return "bounds";
        case Suite::zeros: return "zeros";
        case Suite::identities: return "identities";
        case Suite::terminant: return "terminant";
    }
    return "?";
}

GridConfig GridConfig::defaults() {
    GridConfig cfg;
    cfg.a_values = {-2.5, -1.0, 0.0, 0.5, 0.9};
    cfg.z_real = {5, 10, 20, 50};
    cfg.z_mags = {8, 20};
    cfg.z_args = {kPi / 8, kPi / 4, 3 * kPi / 8};
    cfg.alpha_values = {0.0, 0.25, 0.5};
    return cfg;
}

namespace {
std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}
} // namespace

void GridConfig::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "a") a_values = parse_list(value);
        else if (key == "z") z_real = parse_list(value);
        else if (key == "zmag") z_mags = parse_list(value);
        else if (key == "zarg") z_args = parse_list(value);
        else if (key == "alpha") alpha_values = parse_list(value);
        else if (key == "nmin") n_min = static_cast<unsigned>(std::stoul(value));
        else if (key == "nmax") n_max = static_cast<unsigned>(std::stoul(value));
        else if (key == "kfrom") k_from = std::stol(value);
        else if (key == "kto") k_to = std::stol(value);
        else if (key == "zscan") zero_scan_max = std::stod(value);
        else if (key == "tables_nmax") table_nmax = static_cast<unsigned>(std::stoul(value));
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

VerifyReport run_verify(Suite suite, const GridConfig& cfg) {
    Recorder rec;
    rec.report.suite = suite;
    auto start = std::chrono::steady_clock::now();
    switch (suite) {
        case Suite::tables: run_tables(cfg, rec); break;
        case Suite::envelope: run_envelope(cfg, rec); break;
        case Suite::bounds: run_bounds(cfg, rec); break;
        case Suite::zeros: run_zeros(cfg, rec); break;
        case Suite::identities: run_identities(cfg, rec); break;
        case Suite::terminant: run_terminant(cfg, rec); break;
    }
    auto stop = std::chrono::steady_clock::now();
    rec.report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return rec.report;
}

} // namespace gentrig::verify
