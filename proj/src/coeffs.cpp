#include "gentrig/coeffs.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace gentrig::coeffs {

namespace {

// Memo tables grow monotonically; std::deque keeps element addresses stable
// across growth so callers may hold references while other threads extend.
struct Tables {
    std::mutex mtx;
    std::deque<RationalPolynomial> t;
    std::deque<RationalPolynomial> c;
};

Tables& tables() {
    static Tables tb;
    return tb;
}

RationalPolynomial compute_t(unsigned n, const std::deque<RationalPolynomial>& t_done) {
    if (n == 0) return RationalPolynomial::linear(Rational(0)); // t_0(x) = x
    RationalPolynomial acc =
        RationalPolynomial::pochhammer(2 * n + 2).divide_exact_linear(Rational(n + 1)) * Rational(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        RationalPolynomial fac = RationalPolynomial::pochhammer(2 * k + 1).divide_exact_linear(Rational(k));
        acc -= fac * t_done[n - k];
    }
    return acc;
}

RationalPolynomial compute_d(unsigned n, unsigned k, const std::deque<RationalPolynomial>& t_done) {
    if (k == 0) throw std::domain_error("d_poly: k must be >= 1");
    if (k == 1) return RationalPolynomial::linear(Rational(0)) * Rational(2 * n + 1);
    std::vector<RationalPolynomial> d(k + 1);
    d[1] = RationalPolynomial::linear(Rational(0)) * Rational(2 * n + 1);
    for (unsigned kk = 2; kk <= k; ++kk) {
        RationalPolynomial acc = t_done[kk - 1] * Rational(2 * n + 1, 2 * kk - 1);
        RationalPolynomial sum;
        for (unsigned j = 1; j <= kk - 1; ++j) {
            long num = 2L * j * (n + 1) - static_cast<long>(kk);
            sum += (t_done[j - 1] * d[kk - j]) * Rational(num, 2 * j - 1);
        }
        acc += sum * Rational(1, kk);
        d[kk] = std::move(acc);
    }
    return d[k];
}

void ensure_t_locked(Tables& tb, unsigned n) {
    while (tb.t.size() <= n) tb.t.push_back(compute_t(static_cast<unsigned>(tb.t.size()), tb.t));
}

} // namespace

const RationalPolynomial& t_poly(unsigned n) {
    Tables& tb = tables();
    std::lock_guard<std::mutex> lock(tb.mtx);
    ensure_t_locked(tb, n);
    return tb.t[n];
}

RationalPolynomial d_poly(unsigned n, unsigned k) {
    Tables& tb = tables();
    std::lock_guard<std::mutex> lock(tb.mtx);
    if (k >= 1) ensure_t_locked(tb, k - 1);
    return compute_d(n, k, tb.t);
}

const RationalPolynomial& c_poly(unsigned n) {
    Tables& tb = tables();
    std::lock_guard<std::mutex> lock(tb.mtx);
    while (tb.c.size() <= n) {
        unsigned m = static_cast<unsigned>(tb.c.size());
        ensure_t_locked(tb, m + 1);
        tb.c.push_back(compute_d(m, m + 1, tb.t));
    }
    return tb.c[n];
}

double eval_poly(const RationalPolynomial& p, double x) {
    return p.eval<double>(x);
}

std::vector<long double> t_values(unsigned nmax, long double x) {
    std::vector<long double> t(nmax + 1);
    // Pochhammer values (x)_m for m <= 2*nmax + 2.
    std::vector<long double> poch(2 * nmax + 3);
    poch[0] = 1.0L;
    for (unsigned m = 1; m < poch.size(); ++m) poch[m] = poch[m - 1] * (x + (m - 1));
    t[0] = x;
    for (unsigned n = 1; n <= nmax; ++n) {
        long double acc = (n + 1) / (n + x + 1) * poch[2 * n + 2];
        for (unsigned k = 1; k <= n; ++k) acc -= poch[2 * k + 1] / (k + x) * t[n - k];
        t[n] = acc;
    }
    return t;
}

std::vector<long double> c_values(unsigned nmax, long double x) {
    std::vector<long double> t = t_values(nmax, x);
    std::vector<long double> c(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        std::vector<long double> d(n + 2);
        d[1] = (2.0L * n + 1) * x;
        for (unsigned k = 2; k <= n + 1; ++k) {
            long double acc = (2.0L * n + 1) / (2.0L * k - 1) * t[k - 1];
            long double sum = 0.0L;
            for (unsigned j = 1; j <= k - 1; ++j) {
                sum += (2.0L * j * (n + 1) - k) / (2.0L * j - 1) * t[j - 1] * d[k - j];
            }
            acc += sum / k;
            d[k] = acc;
        }
        c[n] = d[n + 1];
    }
    return c;
}

} // namespace gentrig::coeffs
