#pragma once

#include <string>
#include <vector>

#include "kzeta/dataset.hpp"
#include "kzeta/spectral.hpp"
#include "kzeta/types.hpp"

namespace kzeta {

enum class Method { dirichlet, linear_combination_spectral, direct_spectral };

struct MethodChoice {
  Method tag = Method::dirichlet;
};

const char* method_name(Method m);

enum class PoleKind {
  discrete_spectrum,    // s = 1/2 + i t_j - r
  zeta_zero_shifted,    // s = rho/2 - r for a user-supplied zeta zero rho
  real_axis_residual,   // s = -1/2, -1, -3/2, ... from the residual terms
};

struct PoleDescriptor {
  Cplx location{};
  PoleKind kind = PoleKind::discrete_spectrum;
  int order = 1;
  long j_index = -1;  // form index for discrete_spectrum, else -1
  Cplx zero_input{};  // the supplied rho for zeta_zero_shifted
};

struct Evaluation {
  EvalResult result;
  MethodChoice method;
};

// Known poles of Z_{m,-n} intersected with the closed rectangle
// [sigma_lo, sigma_hi] x [t_lo, t_hi]. Discrete locations 1/2 + i t_j - r
// (and their conjugates), real-axis residual poles at half-integers <= -1/2,
// and rho/2 - r for each supplied zero height (rho = 1/2 + i height).
std::vector<PoleDescriptor> enumerate_poles(
    const SpectralDataset& ds, double sigma_lo, double sigma_hi, double t_lo,
    double t_hi, const std::vector<double>& zero_heights = {});

// Nearest known pole within radius of s, if any.
bool nearest_pole(const SpectralDataset& ds, Cplx s, double radius,
                  const std::vector<double>& zero_heights,
                  PoleDescriptor* out);

// Z_{m,-n}(s) with automatic method dispatch:
//   Re s >= 1.1                 dirichlet
//   -0.25 < Re s < 1.1          linear_combination_spectral
//   Re s <= -0.25               direct_spectral
// Refuses points within pole_exclusion_radius of a known pole.
Evaluation evaluate(long m, long n, Cplx s, const SpectralDataset& ds,
                    const ToleranceConfig& cfg,
                    const std::vector<double>& zero_heights = {});

// Residue of Z_{m,-n} at s = 1/2 + i t_j - r:
//   1/2 lambda_j(m) lambda_j(n) eps_j nu_j cosh(pi t_j)
//       * (-1)^r / r! * Gamma(2 i t_j - r).
// j is a 0-based index into ds.forms.
Cplx residue_discrete(std::size_t j, long r, long m, long n,
                      const SpectralDataset& ds);

// Singular model near s = rho/2 for a zeta zero rho: the residual-term pair
//   2 sigma_{2s-1}(m) sigma_{2s-1}(n) Gamma(2s-1)
//     / ((mn)^{s-1/2} zeta*(2s) zeta*(2s-1))
// evaluated at s_near. Z - model stays bounded as s -> rho/2.
Cplx polar_part_zeta_zero(Cplx rho, long m, long n, Cplx s_near);

// (1/2 pi i) closed-circle integral of evaluate() by trapezoid nodes,
// doubled until stable. The circle must stay inside one dispatch region and
// contain at most the one targeted pole.
Cplx residue_circle(Cplx center, double radius, long m, long n,
                    const SpectralDataset& ds, const ToleranceConfig& cfg,
                    int nodes = 256,
                    const std::vector<double>& zero_heights = {});

}  // namespace kzeta
