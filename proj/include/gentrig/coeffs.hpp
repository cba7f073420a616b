#pragma once

#include "gentrig/rational_poly.hpp"

#include <vector>

namespace gentrig::coeffs {

/// Phase-series coefficient polynomial t_n(x): monic, degree 2n+1, integer
/// coefficients, zero constant term.  t_0(x) = x and
///   t_n(x) = (n+1)/(n+x+1) * (x)_{2n+2} - sum_{k=1}^{n} (x)_{2k+1}/(k+x) * t_{n-k}(x),
/// where both divisions are exact in the polynomial ring (performed as exact
/// quotients with a zero-remainder check).  Results are memoised; the
/// returned reference stays valid for the lifetime of the process.
const RationalPolynomial& t_poly(unsigned n);

/// d_{n,k}(x): coefficient of z^{-2k} (times (-1)^k) in the expansion of
/// (z^{-1} Phi)^{2n+1}.  d_{n,1}(x) = (2n+1) x and for k >= 2
///   d_{n,k}(x) = (2n+1)/(2k-1) t_{k-1}(x)
///              + (1/k) sum_{j=1}^{k-1} (2j(n+1)-k)/(2j-1) t_{j-1}(x) d_{n,k-j}(x).
RationalPolynomial d_poly(unsigned n, unsigned k);

/// Inversion-series coefficient c_n(x) = d_{n,n+1}(x): monic, degree 2n+1,
/// rational coefficients, zero constant term.  Memoised.
const RationalPolynomial& c_poly(unsigned n);

/// Horner evaluation of an exact polynomial in double precision.
double eval_poly(const RationalPolynomial& p, double x);

/// Fast numeric recurrences (long double) for term-magnitude scans.  These
/// evaluate the same recurrences at a fixed numeric x without exact
/// arithmetic; adequate for locating the smallest term, not for certified
/// bounds.  Returns values for n = 0..nmax inclusive.
std::vector<long double> t_values(unsigned nmax, long double x);
std::vector<long double> c_values(unsigned nmax, long double x);

} // namespace gentrig::coeffs
