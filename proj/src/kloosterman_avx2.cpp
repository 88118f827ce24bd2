#include <immintrin.h>

#include <cstddef>

#include "kloosterman_detail.hpp"
#include "kzeta/kloosterman.hpp"

namespace kzeta {

namespace {

// cos(2*pi*g) for g in [-1/2, 1/2] as a Taylor polynomial in t = 2*pi*g;
// |t| <= pi keeps the first omitted term (t^28/28!) below 3e-16.
constexpr double kC[14] = {
    1.0,
    -1.0 / 2,
    1.0 / 24,
    -1.0 / 720,
    1.0 / 40320,
    -1.0 / 3628800,
    1.0 / 479001600,
    -1.0 / 87178291200.0,
    1.0 / 20922789888000.0,
    -1.0 / 6402373705728000.0,
    1.0 / 2432902008176640000.0,
    -1.0 / 1124000727777607680000.0,
    1.0 / 620448401733239439360000.0,
    -1.0 / 403291461126605635584000000.0,
};

double cos_poly_scalar(double t) {
  const double t2 = t * t;
  double acc = kC[13];
  for (int j = 12; j >= 0; --j) acc = acc * t2 + kC[j];
  return acc;
}

}  // namespace

namespace detail {

double cos_sum_avx2(const double* k, std::size_t count, double inv_ell) {
  const __m256d vinv = _mm256_set1_pd(inv_ell);
  const __m256d vtwopi = _mm256_set1_pd(6.283185307179586476925286766559);
  __m256d vacc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d x = _mm256_mul_pd(_mm256_loadu_pd(k + i), vinv);
    x = _mm256_sub_pd(
        x, _mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC));
    const __m256d t = _mm256_mul_pd(x, vtwopi);
    const __m256d t2 = _mm256_mul_pd(t, t);
    __m256d p = _mm256_set1_pd(kC[13]);
    for (int j = 12; j >= 0; --j)
      p = _mm256_fmadd_pd(p, t2, _mm256_set1_pd(kC[j]));
    vacc = _mm256_add_pd(vacc, p);
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, vacc);
  double acc = ((lane[0] + lane[1]) + lane[2]) + lane[3];
  for (; i < count; ++i) {
    double f = k[i] * inv_ell;
    f -= __builtin_nearbyint(f);
    acc += cos_poly_scalar(6.283185307179586476925286766559 * f);
  }
  return acc;
}

}  // namespace detail

bool kloosterman_avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace kzeta
