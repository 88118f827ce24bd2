#include "kzeta/kloosterman.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "kloosterman_detail.hpp"

namespace kzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long mod_reduce(long a, long ell) {
  long r = a % ell;
  return r < 0 ? r + ell : r;
}

// Inverse of a mod ell via extended gcd; -1 if not invertible.
long inv_mod(long a, long ell) {
  long r0 = ell, r1 = mod_reduce(a, ell);
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) return -1;
  return mod_reduce(s0, ell);
}

void check_ell(long ell) {
  if (ell < 1) raise(ErrorKind::InvalidArgument, "ell must be >= 1");
}

double sum_row(long m, long n, long ell, bool use_avx2) {
  if (ell == 1) return 1.0;
  static thread_local std::vector<double> scratch;
  const std::size_t cnt = detail::kloosterman_angles(m, n, ell, scratch);
  const double inv_ell = 1.0 / static_cast<double>(ell);
  if (use_avx2) return detail::cos_sum_avx2(scratch.data(), cnt, inv_ell);
  return detail::cos_sum_scalar(scratch.data(), cnt, inv_ell);
}

}  // namespace

namespace detail {

std::size_t kloosterman_angles(long m, long n, long ell,
                               std::vector<double>& k_out) {
  const long mr = mod_reduce(m, ell);
  const long nr = mod_reduce(n, ell);
  // Units in ascending order with prefix products, one gcd inverse total,
  // inverses recovered in a backward sweep.
  static thread_local std::vector<long> units, prefix;
  units.clear();
  prefix.clear();
  long run = 1;
  for (long a = 1; a < ell; ++a) {
    if (std::gcd(a, ell) != 1) continue;
    units.push_back(a);
    run = (run * a) % ell;  // ell <= 1e7 so products fit in 63 bits
    prefix.push_back(run);
  }
  const std::size_t cnt = units.size();
  k_out.resize(cnt);
  long inv_run = inv_mod(prefix[cnt - 1], ell);
  for (std::size_t i = cnt; i-- > 0;) {
    const long abar =
        i == 0 ? inv_run : (inv_run * prefix[i - 1]) % ell;
    inv_run = (inv_run * units[i]) % ell;
    k_out[i] = static_cast<double>((units[i] * nr + abar * mr) % ell);
  }
  return cnt;
}

double cos_sum_scalar(const double* k, std::size_t count, double inv_ell) {
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    double f = k[i] * inv_ell;
    f -= std::nearbyint(f);
    acc += std::cos(kTwoPi * f);
  }
  return acc;
}

}  // namespace detail

#ifndef KZETA_HAVE_AVX2
namespace detail {
double cos_sum_avx2(const double*, std::size_t, double) {
  raise(ErrorKind::InvalidArgument, "AVX2 kernel not compiled in");
}
}  // namespace detail

bool kloosterman_avx2_available() { return false; }
#endif

double kloosterman_bruteforce(long m, long n, long ell) {
  check_ell(ell);
  if (m == 0 || n == 0) raise(ErrorKind::InvalidArgument, "m, n must be nonzero");
  if (ell == 1) return 1.0;
  const long mr = mod_reduce(m, ell);
  const long nr = mod_reduce(n, ell);
  double acc = 0.0;
  for (long a = 1; a < ell; ++a) {
    const long abar = inv_mod(a, ell);
    if (abar < 0) continue;
    double f = static_cast<double>((a * nr + abar * mr) % ell) / ell;
    f -= std::nearbyint(f);
    acc += std::cos(kTwoPi * f);
  }
  return acc;
}

double kloosterman_sum_scalar(long m, long n, long ell) {
  check_ell(ell);
  return sum_row(m, n, ell, false);
}

double kloosterman_sum_avx2(long m, long n, long ell) {
  check_ell(ell);
  if (!kloosterman_avx2_available())
    raise(ErrorKind::InvalidArgument, "AVX2 kernel unavailable on this host");
  return sum_row(m, n, ell, true);
}

double kloosterman_fast(long m, long n, long ell) {
  check_ell(ell);
  if (m == 0 || n == 0) raise(ErrorKind::InvalidArgument, "m, n must be nonzero");
  if (ell == 1) return 1.0;
  const bool avx2 = kloosterman_avx2_available();
  // Factor into prime powers, then split by twisted multiplicativity:
  // S(m,n;q*c) = S(m*cbar^2, n; q) * S(m*qbar^2, n; c).
  double prod = 1.0;
  long rest = ell;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    long q = 1;
    while (rest % p == 0) {
      q *= p;
      rest /= p;
    }
    const long cof = ell / q;
    const long cbar = inv_mod(cof, q);
    const long mq = mod_reduce(mod_reduce(m, q) * ((cbar * cbar) % q), q);
    prod *= sum_row(mq, n, q, avx2);
  }
  if (rest > 1) {
    const long q = rest;
    const long cof = ell / q;
    const long cbar = inv_mod(cof, q);
    const long mq = mod_reduce(mod_reduce(m, q) * ((cbar * cbar) % q), q);
    prod *= sum_row(mq, n, q, avx2);
  }
  return prod;
}

std::vector<double> kloosterman_batch(long m, long n, long ell_max,
                                      int threads, long resource_cap) {
  if (ell_max < 1) raise(ErrorKind::InvalidArgument, "ell_max must be >= 1");
  if (m == 0 || n == 0) raise(ErrorKind::InvalidArgument, "m, n must be nonzero");
  if (ell_max > resource_cap)
    raise(ErrorKind::ResourceLimit, "ell_max exceeds the batch cap");
  std::vector<double> out(static_cast<std::size_t>(ell_max));
  const bool avx2 = kloosterman_avx2_available();
  const int nthreads = std::max(1, threads);
  // Per-ell results are independent; any block partition yields identical
  // output since each slot is written exactly once.
  constexpr long kBlock = 64;
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      const long blk = next.fetch_add(1);
      const long lo = 1 + blk * kBlock;
      if (lo > ell_max) return;
      const long hi = std::min(ell_max, lo + kBlock - 1);
      for (long ell = lo; ell <= hi; ++ell)
        out[static_cast<std::size_t>(ell - 1)] = sum_row(m, n, ell, avx2);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

long euler_phi(long ell) {
  check_ell(ell);
  long result = ell, rest = ell;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

long divisor_count(long ell) {
  check_ell(ell);
  long cnt = 1, rest = ell;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    cnt *= e + 1;
  }
  if (rest > 1) cnt *= 2;
  return cnt;
}

double weil_bound(long m, long n, long ell) {
  check_ell(ell);
  const long g = std::gcd(std::gcd(std::abs(m), std::abs(n)), ell);
  return static_cast<double>(divisor_count(ell)) *
         std::sqrt(static_cast<double>(g)) *
         std::sqrt(static_cast<double>(ell));
}

double divisor_tail_bound(double L, double x) {
  if (!(x > 1.0) || !(L >= 1.0))
    raise(ErrorKind::InvalidArgument, "divisor_tail_bound needs x > 1, L >= 1");
  // sum_{ell > L} tau(ell) ell^{-x} = sum_d d^{-x} sum_{e > L/d} e^{-x},
  // split at d <= L, with integral bounds for the inner sums.
  double zx = 1.0;  // zeta(x) upper estimate
  for (long k = 2; k <= 64; ++k) zx += std::pow(static_cast<double>(k), -x);
  zx += std::pow(64.0, 1.0 - x) / (x - 1.0);
  const double l1x = std::pow(L, 1.0 - x);
  return l1x * (1.0 + (std::log(L) + 1.0) / (x - 1.0) + zx / (x - 1.0)) +
         zx * std::pow(L, -x);
}

}  // namespace kzeta
