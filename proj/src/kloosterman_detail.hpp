#pragma once

#include <cstddef>
#include <vector>

namespace kzeta::detail {

// Fills k_out with the reduced exponents (a*n + abar*m) mod ell over the
// units a of Z/ell, as exact small integers stored in doubles. Returns the
// unit count. ell >= 2.
std::size_t kloosterman_angles(long m, long n, long ell,
                               std::vector<double>& k_out);

// sum_i cos(2*pi * k[i] * inv_ell), scalar libm path.
double cos_sum_scalar(const double* k, std::size_t count, double inv_ell);

// Same sum with AVX2+FMA and a degree-26 cosine polynomial. Defined only
// when the build carries AVX2 support; guarded by
// kloosterman_avx2_available() at call sites.
double cos_sum_avx2(const double* k, std::size_t count, double inv_ell);

}  // namespace kzeta::detail
