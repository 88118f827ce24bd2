#pragma once

#include <functional>

#include "kzeta/types.hpp"

namespace kzeta {

// Z_{m,n}(s) = (2*pi*sqrt|mn|)^{2s-1} * sum_{ell>=1} S(m,n;ell) / ell^{2s}.
// n carries its sign; the opposite-sign function is z_dirichlet(m, -n, s).
// Absolutely convergent for Re s > 3/4 (Weil bound); evaluation is refused
// below 3/4 + 0.01. When the certified truncation for target_abs_tol does
// not fit in max_terms the call raises NonConvergent, unless best_effort is
// set, which returns the max_terms partial sum with its honest tail bound.
EvalResult z_dirichlet(long m, long n, Cplx s, const ToleranceConfig& cfg,
                       bool best_effort = false);

// Z~_{m,n}(s): the opposite-sign series with each term damped by
// exp(-4*pi*sqrt(mn)/ell). m, n > 0; the Kloosterman sums inside are
// S(m,-n;ell). Same convergence region and truncation policy as z_dirichlet.
EvalResult z_tilde_dirichlet(long m, long n, Cplx s, const ToleranceConfig& cfg,
                             bool best_effort = false);

// Z~(s) = sum_{k>=0} (-2)^k/k! * Z(s + k/2), valid where the series
// converge. Cross-identity partner of z_tilde_dirichlet.
EvalResult z_tilde_via_z(long m, long n, Cplx s, const ToleranceConfig& cfg);

// Z(s) = sum_{k>=0} 2^k/k! * Z~(s + k/2) with an injected Z~ evaluator.
// With a spectral backend this defines Z on the whole plane.
using TildeBackend = std::function<EvalResult(Cplx)>;
EvalResult z_via_z_tilde(Cplx s, const TildeBackend& tilde_backend,
                         const ToleranceConfig& cfg);

// Convenience overload wiring the Dirichlet backend (convergence region only).
EvalResult z_via_z_tilde(long m, long n, Cplx s, const ToleranceConfig& cfg);

}  // namespace kzeta
