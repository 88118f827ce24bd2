#pragma once

#include "kzeta/dataset.hpp"
#include "kzeta/types.hpp"

namespace kzeta {

// Vertical line Re u = 0, or the right-bulging path
// Re u = 1/(20 log(|Im u| + 2)) that dodges zeta zeros near Re = 1/2.
enum class ContourKind { line_zero, curve_c };

struct ContourSpec {
  ContourKind kind = ContourKind::line_zero;
};

// Integrand families along the contour; all share the Eisenstein factor
// sigma_{2u}(m) sigma_{2u}(n) / ((mn)^u zeta(1+2u) zeta(1-2u)).
//   tilde:     cos(pi u) * G(2s-1+2u) G(2s-1-2u) / G(2s-1/2), prefactor
//              2^{4-4s} sqrt(pi) / (2 pi i)
//   plain:     cos(pi u) * G(s-1/2+u) G(s-1/2-u), prefactor 1 / (2 pi i)
//   same_sign: G(s-1/2+u) G(s-1/2-u), prefactor sin(pi s) / (2 pi i)
enum class SpectralKernel { tilde, plain, same_sign };

// Boundary-line residual weighting for the opposite-sign expansion on
// Re s = -R + 1/2. halved_last_from_zero sums r = 0..R with the last term
// halved (the variant that passes two-sided continuity); halved_last_from_one
// starts at r = 1 as the source formula is written.
enum class BoundaryVariant { halved_last_from_zero, halved_last_from_one };

// Discrete spectrum of the damped function:
//   sum_j eps_j nu_j cosh(pi t_j) lambda_j(m) lambda_j(n)
//          * 2^{3-4s} sqrt(pi) G(2s-1+2it_j) G(2s-1-2it_j) / G(2s-1/2).
// Terms decay like e^{-pi t_j}; the tail beyond t_max enters abs_error.
EvalResult z_tilde_discrete(long m, long n, Cplx s, const SpectralDataset& ds,
                            const ToleranceConfig& cfg);

// Adaptive Gauss-Legendre path integral of the selected kernel.
EvalResult contour_integral(SpectralKernel kernel, long m, long n, Cplx s,
                            ContourSpec contour, const ToleranceConfig& cfg);

// Residual term of the damped expansion:
//   R~_r(s) = (-1)^r/r! * 2^{3-4s} sqrt(pi)
//             * sigma_{2s-1+r}(m) sigma_{2s-1+r}(n) / (mn)^{s-1/2+r/2}
//             * G(4s-2+r) / (G(2s-1/2) zeta*(2s+r) zeta*(2-2s-r)).
EvalResult r_tilde_term(long r, long m, long n, Cplx s,
                        const ToleranceConfig& cfg);

// Residual term of the opposite-sign expansion:
//   R_r^-(s) = 2 (-1)^r/r! * G(2s+r-1)
//              * sigma_{2s+2r-1}(m) sigma_{2s+2r-1}(n) / (mn)^{s+r-1/2}
//              / (zeta*(2s+2r) zeta*(2-2s-2r)).
EvalResult r_minus_term(long r, long m, long n, Cplx s,
                        const ToleranceConfig& cfg);

// Z~_{m,-n}(s) anywhere in C. Region dispatch on sigma = Re s with
// R = ceil(-2 sigma):
//   sigma > 1/2:              discrete + integral over (0)
//   strip -R/2 < sigma < -R/2 + 1/2:  + sum_{r<=R} 2 R~_r
//   line sigma = -R/2 + 1/2:  integral over C, + sum_{r<R} 2 R~_r + R~_R
// Within line_band (1e-6) of a line the boundary formula is used.
EvalResult z_tilde_spectral(long m, long n, Cplx s, const SpectralDataset& ds,
                            const ToleranceConfig& cfg);

// Z_{m,-n}(s) for Re s < 0 by the direct expansion:
//   1/2 sum_j eps_j nu_j cosh(pi t_j) lambda_j(m) lambda_j(n)
//       G(s-1/2+it_j) G(s-1/2-it_j)
//   + integral + sum_{r<=R} R_r^- on strips -R-1/2 < sigma < -R+1/2,
//   with the C-contour and weighted residual sum on lines sigma = -R+1/2.
// The discrete tail decays only polynomially (t^{2 sigma - 2}); the reported
// abs_error carries the tail bound at the dataset's t_max.
EvalResult z_opposite_spectral(long m, long n, Cplx s,
                               const SpectralDataset& ds,
                               const ToleranceConfig& cfg,
                               BoundaryVariant variant =
                                   BoundaryVariant::halved_last_from_zero);

// p_{m,n}(k) = (2k-1) sum_ell S(m,n;ell)/ell * J_{2k-1}(4 pi sqrt(mn)/ell).
EvalResult p_holomorphic(long k, long m, long n, const ToleranceConfig& cfg);

// Same-sign Z_{m,n}(s): discrete and continuous parts weighted by sin(pi s),
// holomorphic series sum_k p(k) G(k-1+s)/G(k+1-s), Kronecker delta term
// -delta_{mn} G(s)/(2 pi G(1-s)); strips Re s in (-R-1/2, -R+1/2) add
// sum_{r<=R} (-1)^r R_r^-, lines use the C-contour and weighted sum.
EvalResult z_same_sign_spectral(long m, long n, Cplx s,
                                const SpectralDataset& ds,
                                const ToleranceConfig& cfg);

// Z_{m,-n}(s) = sum_k 2^k/k! Z~(s+k/2) with the spectral Z~, regrouped:
// the discrete double sum is evaluated per form (adaptive in k), the
// continuous parts for all k clear of branch lines ride one contour pass
// with the k-sum folded into the integrand, and the few low-k terms near
// or below branch lines fall back to the full Z~ dispatch. Valid on all
// of C; this is the continuation used by the evaluate() front end between
// the Dirichlet and direct-spectral regions.
EvalResult z_lincomb_spectral(long m, long n, Cplx s,
                              const SpectralDataset& ds,
                              const ToleranceConfig& cfg);

}  // namespace kzeta
