#include "gentrig/coeffs.hpp"
#include "gentrig/expansions.hpp"
#include "gentrig/oracle.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/terminant.hpp"
#include "gentrig/verify.hpp"
#include "gentrig/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using Cd = std::complex<double>;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

const double kPi = boost::math::constants::pi<double>();

// Accepts "RE", "RE,IM", or "MOD:ARG" (ARG in radians, or degrees with a
// trailing "deg", e.g. "8:45deg").
Cd parse_complex(const std::string& text) {
    if (auto comma = text.find(','); comma != std::string::npos) {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    }
    if (auto colon = text.find(':'); colon != std::string::npos) {
        double mod = std::stod(text.substr(0, colon));
        std::string argpart = text.substr(colon + 1);
        double arg;
        if (argpart.size() > 3 && argpart.substr(argpart.size() - 3) == "deg") {
            arg = std::stod(argpart.substr(0, argpart.size() - 3)) * kPi / 180.0;
        } else {
            arg = std::stod(argpart);
        }
        return std::polar(mod, arg);
    }
    return {std::stod(text), 0.0};
}

json complex_json(const Cd& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json certified_json(const gentrig::expansions::CertifiedValue& cv) {
    json j;
    j["value"] = complex_json(cv.value);
    j["error_bound"] = cv.error_bound ? json(*cv.error_bound) : json(nullptr);
    j["terms_used"] = cv.terms_used;
    j["truncation"] = cv.truncation == gentrig::expansions::Truncation::optimal ? "optimal" : "requested";
    if (cv.sign_certificate) {
        j["sign_certificate"] = *cv.sign_certificate == gentrig::expansions::RemainderSign::remainder_positive
                                    ? "remainder_positive"
                                    : "remainder_negative";
    } else {
        j["sign_certificate"] = nullptr;
    }
    return j;
}

void print_certified(const std::string& fn, const gentrig::expansions::CertifiedValue& cv,
                     const std::string& format) {
    if (format == "json") {
        json j = certified_json(cv);
        j["fn"] = fn;
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "fn,value_re,value_im,error_bound,terms_used,truncation\n";
        std::cout << fn << "," << num17(cv.value.real()) << "," << num17(cv.value.imag()) << ","
                  << (cv.error_bound ? num17(*cv.error_bound) : "") << "," << cv.terms_used << ","
                  << (cv.truncation == gentrig::expansions::Truncation::optimal ? "optimal" : "requested")
                  << "\n";
    } else {
        std::cout << fn << " = " << num17(cv.value.real());
        if (cv.value.imag() != 0) std::cout << (cv.value.imag() < 0 ? " - " : " + ")
                                            << num17(std::abs(cv.value.imag())) << "i";
        std::cout << "\n  terms_used: " << cv.terms_used
                  << (cv.truncation == gentrig::expansions::Truncation::optimal ? " (optimal)" : "") << "\n";
        if (cv.error_bound) std::cout << "  error_bound: " << num17(*cv.error_bound) << "\n";
        if (cv.sign_certificate) {
            std::cout << "  remainder sign: "
                      << (*cv.sign_certificate == gentrig::expansions::RemainderSign::remainder_positive
                              ? "+"
                              : "-")
                      << "\n";
        }
    }
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

struct Options {
    std::string format = "pretty";
    double precision = 0.0;
    std::string config_file;
};

int cmd_eval(const Options& opt, const std::string& fn, Cd a, const std::string& zs, double alpha,
             const std::string& order) {
    using namespace gentrig::expansions;
    EvalRequest req;
    req.a = a;
    req.z = parse_complex(zs);
    req.alpha = alpha;
    if (order != "optimal") req.order = static_cast<unsigned>(std::stoul(order));

    if (fn == "fresnelS" || fn == "fresnelC") {
        FresnelResult fr = fresnel(req.z);
        Cd v = fn == "fresnelS" ? fr.S : fr.C;
        CertifiedValue cv;
        cv.value = v;
        print_certified(fn, cv, opt.format);
        return kExitOk;
    }
    CertifiedValue cv;
    if (fn == "f") cv = f_expand(req);
    else if (fn == "g") cv = g_expand(req);
    else if (fn == "m2") cv = m2_expand(req);
    else if (fn == "phi") cv = phi_expand(req);
    else if (fn == "ti") cv = ti_expand(req);
    else if (fn == "si") cv = si_expand(req);
    else if (fn == "ci") cv = ci_expand(req);
    else throw CLI::ValidationError("--fn", "unknown function: " + fn);
    print_certified(fn, cv, opt.format);
    return kExitOk;
}

int cmd_oracle(const Options& opt, const std::string& fn, double a, const std::string& zs, double alpha) {
    using namespace gentrig::oracle;
    const double prec = opt.precision;
    Cd z = parse_complex(zs);
    json j;
    j["fn"] = fn;
    j["a"] = a;
    j["z"] = complex_json(z);
    Cd value;
    if (fn == "f" || fn == "g") {
        auto [f, g] = f_g_quadrature(Cd(a), z, prec);
        value = fn == "f" ? f : g;
    } else if (fn == "m2") {
        auto [f, g] = f_g_quadrature(Cd(a), z, prec);
        value = f * f + g * g;
    } else if (fn == "phi") {
        value = (z.imag() == 0.0) ? Cd(phase_modulus(a, z.real(), prec).phi) : phase_complex(a, z, prec);
    } else if (fn == "ti") {
        value = ti(a, z, alpha, prec);
    } else if (fn == "gamma") {
        value = incomplete_gamma_upper(a, z, prec);
    } else {
        throw CLI::ValidationError("--fn", "unknown oracle function: " + fn);
    }
    if (opt.format == "json") {
        j["value"] = complex_json(value);
        std::cout << j.dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << "fn,value_re,value_im\n"
                  << fn << "," << num17(value.real()) << "," << num17(value.imag()) << "\n";
    } else {
        std::cout << fn << " = " << num17(value.real());
        if (value.imag() != 0) std::cout << (value.imag() < 0 ? " - " : " + ") << num17(std::abs(value.imag())) << "i";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_coeffs(const Options& opt, const std::string& kind, unsigned n, std::optional<unsigned> k) {
    const gentrig::RationalPolynomial* poly = nullptr;
    gentrig::RationalPolynomial dpoly;
    std::string label;
    if (kind == "t") {
        poly = &gentrig::coeffs::t_poly(n);
        label = "t_" + std::to_string(n);
    } else if (kind == "c") {
        poly = &gentrig::coeffs::c_poly(n);
        label = "c_" + std::to_string(n);
    } else if (kind == "d") {
        if (!k) throw CLI::ValidationError("--k", "kind d requires --k");
        dpoly = gentrig::coeffs::d_poly(n, *k);
        poly = &dpoly;
        label = "d_{" + std::to_string(n) + "," + std::to_string(*k) + "}";
    } else {
        throw CLI::ValidationError("--kind", "must be one of t|c|d");
    }

    std::vector<std::string> coeff_strings;
    for (const auto& c : poly->coefficients()) {
        std::ostringstream os;
        os << c;
        coeff_strings.push_back(os.str());
    }
    if (opt.format == "json") {
        json j{{"kind", kind}, {"n", n}, {"degree", poly->degree()}, {"coefficients", coeff_strings}};
        if (k) j["k"] = *k;
        std::cout << j.dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << "power,coefficient\n";
        for (std::size_t i = 0; i < coeff_strings.size(); ++i) std::cout << i << "," << coeff_strings[i] << "\n";
    } else {
        std::cout << label << "(x) = " << poly->to_string() << "\n";
    }
    return kExitOk;
}

int cmd_zeros(const Options& opt, double a, double alpha, long k_from, long k_to, bool refine) {
    auto records = gentrig::zeros::enumerate(a, alpha, k_from, k_to, refine);
    const bool bracketable = (alpha == 0.0 || alpha == 0.5);
    if (opt.format == "csv") {
        std::cout << "k,kappa,seed,seed_bound,refined,residual,bracket_lo,bracket_hi\n";
    }
    for (const auto& r : records) {
        std::optional<std::pair<double, double>> bracket;
        if (bracketable) bracket = gentrig::zeros::literature_bracket(a, alpha, r.k);
        if (opt.format == "json") {
            json j{{"k", r.k}, {"kappa", r.kappa}, {"seed", r.seed}};
            j["seed_bound"] = r.seed_bound ? json(*r.seed_bound) : json(nullptr);
            j["refined"] = r.refined ? json(*r.refined) : json(nullptr);
            j["residual"] = r.residual ? json(*r.residual) : json(nullptr);
            if (bracket) {
                j["bracket_lo"] = bracket->first;
                j["bracket_hi"] = bracket->second;
            }
            std::cout << j.dump() << "\n";
        } else if (opt.format == "csv") {
            std::cout << r.k << "," << num17(r.kappa) << "," << num17(r.seed) << ","
                      << (r.seed_bound ? num17(*r.seed_bound) : "") << ","
                      << (r.refined ? num17(*r.refined) : "") << ","
                      << (r.residual ? num17(*r.residual) : "") << ","
                      << (bracket ? num17(bracket->first) : "") << ","
                      << (bracket ? num17(bracket->second) : "") << "\n";
        } else {
            std::cout << "k=" << r.k << " kappa=" << r.kappa << " seed=" << num17(r.seed);
            if (r.seed_bound) std::cout << " +-" << num17(*r.seed_bound);
            if (r.refined) std::cout << " refined=" << num17(*r.refined);
            if (r.residual) std::cout << " residual=" << num17(*r.residual);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_terminant(const Options& opt, const std::string& ps, const std::string& zs, bool bounds_only) {
    Cd p = parse_complex(ps);
    Cd z = parse_complex(zs);
    gentrig::terminant::TerminantQuery q(p, z);
    json j;
    j["p"] = complex_json(p);
    j["z"] = complex_json(z);
    json bounds = json::array();
    auto add = [&](const gentrig::terminant::TerminantBound& b) {
        if (!b.sector_ok) return;
        json bj{{"proposition", gentrig::terminant::proposition_name(b.proposition)}, {"bound", *b.bound}};
        if (b.theta) bj["theta"] = *b.theta;
        bounds.push_back(bj);
    };
    add(gentrig::terminant::bound_b1(q));
    add(gentrig::terminant::bound_b2(q));
    add(gentrig::terminant::bound_b3(q));
    add(gentrig::terminant::bound_b4(q));
    add(gentrig::terminant::bound_b5(q));
    j["bounds"] = bounds;
    auto best = gentrig::terminant::best_bound(q);
    j["best"] = json{{"proposition", gentrig::terminant::proposition_name(best.proposition)},
                     {"bound", *best.bound}};
    if (!bounds_only) {
        Cd v = gentrig::terminant::terminant_eval(q);
        j["value"] = complex_json(v);
        j["abs_value"] = std::abs(v);
    }
    if (opt.format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        if (j.contains("value")) {
            std::cout << "Pi_p(z) = " << num17(j["value"]["re"].get<double>()) << " + "
                      << num17(j["value"]["im"].get<double>()) << "i  (|.| = "
                      << num17(j["abs_value"].get<double>()) << ")\n";
        }
        for (const auto& b : bounds) {
            std::cout << "  " << b["proposition"].get<std::string>() << ": " << num17(b["bound"].get<double>());
            if (b.contains("theta")) std::cout << " (theta=" << num17(b["theta"].get<double>()) << ")";
            std::cout << "\n";
        }
        std::cout << "  best: " << j["best"]["proposition"].get<std::string>() << " -> "
                  << num17(j["best"]["bound"].get<double>()) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite_arg) {
    gentrig::verify::GridConfig cfg = gentrig::verify::GridConfig::defaults();
    if (!opt.config_file.empty()) cfg.apply(read_config(opt.config_file));
    std::vector<gentrig::verify::Suite> suites;
    if (suite_arg == "all") {
        suites = {gentrig::verify::Suite::tables,    gentrig::verify::Suite::envelope,
                  gentrig::verify::Suite::bounds,    gentrig::verify::Suite::zeros,
                  gentrig::verify::Suite::identities, gentrig::verify::Suite::terminant};
    } else {
        suites = {gentrig::verify::suite_from_string(suite_arg)};
    }
    bool any_failed = false;
    for (auto s : suites) {
        auto report = gentrig::verify::run_verify(s, cfg);
        any_failed = any_failed || report.cases_failed > 0;
        if (opt.format == "json") {
            json j{{"suite", gentrig::verify::suite_name(s)},
                   {"cases_run", report.cases_run},
                   {"cases_failed", report.cases_failed},
                   {"worst_margin", report.worst_margin},
                   {"elapsed", report.elapsed_seconds},
                   {"failures", report.failures}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (report.cases_failed == 0 ? "PASS " : "FAIL ") << gentrig::verify::suite_name(s)
                      << ": " << report.cases_run << " cases, " << report.cases_failed << " failed"
                      << ", worst_margin=" << report.worst_margin << ", " << report.elapsed_seconds
                      << "s\n";
            for (const auto& f : report.failures) std::cout << "    " << f << "\n";
        }
    }
    return any_failed ? kExitAssertion : kExitOk;
}

int cmd_table(const Options& opt, const std::string& fn, double a, double alpha, double z_from,
              double z_to, double z_step, unsigned n_max, long k_from, long k_to) {
    const bool csv = opt.format != "json";
    if (fn == "coeffs-t" || fn == "coeffs-c") {
        if (csv) std::cout << "n,coefficients\n";
        for (unsigned n = 0; n <= n_max; ++n) {
            const auto& p = fn == "coeffs-t" ? gentrig::coeffs::t_poly(n) : gentrig::coeffs::c_poly(n);
            std::vector<std::string> cs;
            for (const auto& c : p.coefficients()) {
                std::ostringstream os;
                os << c;
                cs.push_back(os.str());
            }
            if (csv) {
                std::cout << n << ",\"";
                for (std::size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ";" : "") << cs[i];
                std::cout << "\"\n";
            } else {
                std::cout << json{{"n", n}, {"coefficients", cs}}.dump() << "\n";
            }
        }
        return kExitOk;
    }
    if (fn == "zeros") {
        return cmd_zeros(opt, a, alpha, k_from, k_to, true);
    }
    if (csv) std::cout << "z,value_re,value_im,error_bound,terms_used\n";
    for (double z = z_from; z <= z_to + 1e-12; z += z_step) {
        gentrig::expansions::EvalRequest req;
        req.a = Cd(a);
        req.z = Cd(z);
        req.alpha = alpha;
        gentrig::expansions::CertifiedValue cv;
        if (fn == "f") cv = gentrig::expansions::f_expand(req);
        else if (fn == "g") cv = gentrig::expansions::g_expand(req);
        else if (fn == "m2") cv = gentrig::expansions::m2_expand(req);
        else if (fn == "phi") cv = gentrig::expansions::phi_expand(req);
        else if (fn == "ti") cv = gentrig::expansions::ti_expand(req);
        else if (fn == "x") cv = gentrig::zeros::x_expand(a, Cd(z), std::nullopt);
        else throw CLI::ValidationError("--fn", "unknown table function: " + fn);
        if (csv) {
            std::cout << num17(z) << "," << num17(cv.value.real()) << "," << num17(cv.value.imag()) << ","
                      << (cv.error_bound ? num17(*cv.error_bound) : "") << "," << cv.terms_used << "\n";
        } else {
            json j = certified_json(cv);
            j["z"] = z;
            std::cout << j.dump() << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gentrig: certified asymptotics for the generalised trigonometric integral,\n"
                 "its modulus/phase functions, and its positive real zeros"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    if (const char* env = std::getenv("GENTRIG_PRECISION")) opt.precision = std::atof(env);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--precision", opt.precision, "Oracle relative precision target");
    app.add_option("--config", opt.config_file, "key=value config file (verify grids)");

    // eval
    auto* eval = app.add_subcommand("eval", "Certified asymptotic evaluation");
    std::string eval_fn, eval_z = "10", eval_order = "optimal", eval_a = "0";
    double eval_alpha = 0.0;
    eval->add_option("--fn", eval_fn, "f|g|m2|phi|ti|si|ci|fresnelS|fresnelC")->required();
    eval->add_option("--a", eval_a, "parameter a (RE or RE,IM)");
    eval->add_option("--z", eval_z, "argument z (RE, RE,IM or MOD:ARG)")->required();
    eval->add_option("--alpha", eval_alpha, "alpha in [0,1) for ti");
    eval->add_option("--order", eval_order, "truncation order N or 'optimal'");

    // oracle
    auto* orc = app.add_subcommand("oracle", "High-precision reference values");
    std::string orc_fn, orc_z;
    double orc_a = 0.0, orc_alpha = 0.0;
    orc->add_option("--fn", orc_fn, "f|g|m2|phi|ti|gamma")->required();
    orc->add_option("--a", orc_a, "parameter a");
    orc->add_option("--z", orc_z, "argument (z, or w for gamma)")->required();
    orc->add_option("--alpha", orc_alpha, "alpha for ti");

    // coeffs
    auto* cf = app.add_subcommand("coeffs", "Exact coefficient polynomials");
    std::string cf_kind;
    unsigned cf_n = 0;
    std::optional<unsigned> cf_k;
    cf->add_option("--kind", cf_kind, "t|c|d")->required();
    cf->add_option("--n", cf_n, "index n")->required();
    cf->add_option("--k", cf_k, "index k (kind d only)");

    // zeros
    auto* zr = app.add_subcommand("zeros", "Indexed positive real zeros");
    double zr_a = 0.0, zr_alpha = 0.0;
    long zr_from = 0, zr_to = 10;
    bool zr_refine = false;
    zr->add_option("--a", zr_a, "parameter a < 1")->required();
    zr->add_option("--alpha", zr_alpha, "alpha in [0,1)");
    zr->add_option("--k-from", zr_from, "first index");
    zr->add_option("--k-to", zr_to, "last index");
    zr->add_flag("--refine", zr_refine, "Newton-refine each seed");

    // terminant
    auto* tm = app.add_subcommand("terminant", "Basic terminant value and bounds");
    std::string tm_p, tm_z;
    bool tm_bounds_only = false;
    tm->add_option("--p", tm_p, "order p (RE or RE,IM), Re p > 0")->required();
    tm->add_option("--z", tm_z, "argument z (MOD:ARG or RE,IM)")->required();
    tm->add_flag("--bounds-only", tm_bounds_only, "skip quadrature evaluation");

    // verify
    auto* vf = app.add_subcommand("verify", "Run verification suites against the oracle");
    std::string vf_suite = "all";
    vf->add_option("--suite", vf_suite, "tables|envelope|bounds|zeros|identities|terminant|all");

    // table
    auto* tb = app.add_subcommand("table", "Emit a grid of values");
    std::string tb_fn;
    double tb_a = 0.0, tb_alpha = 0.0, tb_zfrom = 5, tb_zto = 50, tb_zstep = 5;
    unsigned tb_nmax = 5;
    long tb_kfrom = 0, tb_kto = 10;
    tb->add_option("--fn", tb_fn, "f|g|m2|phi|ti|x|zeros|coeffs-t|coeffs-c")->required();
    tb->add_option("--a", tb_a, "parameter a");
    tb->add_option("--alpha", tb_alpha, "alpha");
    tb->add_option("--z-from", tb_zfrom, "grid start");
    tb->add_option("--z-to", tb_zto, "grid end");
    tb->add_option("--z-step", tb_zstep, "grid step");
    tb->add_option("--n-max", tb_nmax, "max n for coefficient tables");
    tb->add_option("--k-from", tb_kfrom, "first zero index");
    tb->add_option("--k-to", tb_kto, "last zero index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.precision > 0) gentrig::oracle::set_default_precision(opt.precision);
        if (eval->parsed()) return cmd_eval(opt, eval_fn, parse_complex(eval_a), eval_z, eval_alpha, eval_order);
        if (orc->parsed()) return cmd_oracle(opt, orc_fn, orc_a, orc_z, orc_alpha);
        if (cf->parsed()) return cmd_coeffs(opt, cf_kind, cf_n, cf_k);
        if (zr->parsed()) return cmd_zeros(opt, zr_a, zr_alpha, zr_from, zr_to, zr_refine);
        if (tm->parsed()) return cmd_terminant(opt, tm_p, tm_z, tm_bounds_only);
        if (vf->parsed()) return cmd_verify(opt, vf_suite);
        if (tb->parsed())
            return cmd_table(opt, tb_fn, tb_a, tb_alpha, tb_zfrom, tb_zto, tb_zstep, tb_nmax, tb_kfrom, tb_kto);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gentrig::NonConvergence& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
    return kExitUsage;
}
