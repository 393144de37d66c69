#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "qdurr/qcontext.hpp"

namespace qdurr {

/// (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j); 1 for n = 0.
std::complex<double> qpoch_finite(std::complex<double> a, int n, const QContext& ctx);

/// (a;q)_inf, truncated once |a| q^j < eps_term (1-q). The report carries
/// the absolute bound on the neglected log-factors.
std::pair<std::complex<double>, TruncationReport>
qpoch_inf(std::complex<double> a, const QContext& ctx);

/// Convenience for real arguments.
double qpoch_inf_real(double a, const QContext& ctx);

/// sum_k (-1)^k q^{k(k-1)/2} z^k / (q;q)_k, entire in z.
std::complex<double> euler_series(std::complex<double> z, const QContext& ctx);

/// sum_k z^k / (q;q)_k = 1/(z;q)_inf, |z| < 1.
std::complex<double> euler_recip_series(std::complex<double> z, const QContext& ctx);

/// ln (-r;q)_inf = sum_j ln(1 + r q^j), overflow-safe for r up to ~1e15.
double log_qpoch_neg(double r, const QContext& ctx);

/// Jackson q-integral over [0,a]: (1-q) a sum_j q^j f(a q^j).
double jackson_qintegral(const std::function<double(double)>& f, double a,
                         const QContext& ctx);

} // namespace qdurr
