#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <stdexcept>
#include <string>

namespace gentrig {

/// Raised when a quadrature or root iteration cannot reach its target.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Double-exponential quadrature over (0, inf).  The integrand may return a
/// real or complex type.  Throws NonConvergence if the error estimate ends
/// up more than ~1e3 above the requested tolerance relative to L1.
template <typename Real, typename F>
auto integrate_half_line(const F& f, Real tol) {
    thread_local boost::math::quadrature::exp_sinh<Real> integrator(14);
    Real error = 0, l1 = 0;
    auto result = integrator.integrate(f, tol, &error, &l1);
    if (l1 > 0 && !(error <= tol * 1000 * l1)) {
        throw NonConvergence("exp_sinh quadrature did not reach requested tolerance");
    }
    return result;
}

/// Double-exponential quadrature over a finite interval [a, b].
template <typename Real, typename F>
auto integrate_finite(const F& f, Real a, Real b, Real tol) {
    thread_local boost::math::quadrature::tanh_sinh<Real> integrator(14);
    Real error = 0, l1 = 0;
    auto result = integrator.integrate(f, a, b, tol, &error, &l1);
    if (l1 > 0 && !(error <= tol * 1000 * l1)) {
        throw NonConvergence("tanh_sinh quadrature did not reach requested tolerance");
    }
    return result;
}

} // namespace gentrig
