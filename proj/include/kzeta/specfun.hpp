#pragma once

#include "kzeta/types.hpp"

namespace kzeta {

// log Gamma(z) for all z off the poles. The imaginary part may differ from
// the principal branch by a multiple of 2*pi; every consumer exponentiates
// sums of these, which is exact under that freedom.
Cplx log_gamma(Cplx z);

// Overflow-safe log sin(pi z) / log cos(pi z), same branch caveat.
Cplx log_sin_pi(Cplx z);
Cplx log_cos_pi(Cplx z);

// Gamma(z). PoleProximity within cfg.pole_exclusion_radius of 0, -1, -2, ...
EvalResult complex_gamma(Cplx z, const ToleranceConfig& cfg = {});

// zeta(s) by Euler-Maclaurin, reflected through the functional equation for
// Re s < -1/2. PoleProximity at s = 1.
EvalResult riemann_zeta(Cplx s, const ToleranceConfig& cfg = {});

// zeta*(s) = zeta(s) Gamma(s/2) pi^{-s/2}. PoleProximity at s in {0, 1}.
EvalResult completed_zeta(Cplx s, const ToleranceConfig& cfg = {});

// sigma_w(n) = sum over divisors d of n of d^w.
Cplx divisor_sigma(Cplx w, long n);

// 2F1(a, b; c; 1/2) by direct series.
EvalResult gauss_2f1_half(Cplx a, Cplx b, Cplx c, const ToleranceConfig& cfg = {});

// Rising factorial (z)_n as a direct product.
Cplx pochhammer(Cplx z, long n);

// J_order(x) for odd positive order.
EvalResult bessel_j_odd(long order, double x);

}  // namespace kzeta
