#pragma once

#include <vector>

#include "kzeta/types.hpp"

namespace kzeta {

// S(m,n;ell) = sum over units a mod ell of exp(2*pi*i*(a*n + abar*m)/ell).
// Real-valued; depends only on (m mod ell, n mod ell).

// Direct enumeration with a per-element extended-gcd inverse. O(ell log ell).
// The test oracle; everything faster is checked against it.
double kloosterman_bruteforce(long m, long n, long ell);

// Factors ell and splits by twisted multiplicativity
//   S(m,n;l1*l2) = S(m*inv(l2)^2, n; l1) * S(m*inv(l1)^2, n; l2),
// enumerating only within prime-power factors.
double kloosterman_fast(long m, long n, long ell);

// S(m,n;ell) for ell = 1..ell_max. Parallel over ell shards; output is
// bit-identical for any thread count. Default cap refuses ell_max > 10^7.
std::vector<double> kloosterman_batch(long m, long n, long ell_max,
                                      int threads = 1,
                                      long resource_cap = 10000000L);

// Single-modulus kernel used by batch: unit enumeration with linear-time
// batched inverses, scalar cosine accumulation.
double kloosterman_sum_scalar(long m, long n, long ell);

// AVX2 variant of the kernel. Available only when compiled in and the CPU
// supports it; call sites must check availability first.
bool kloosterman_avx2_available();
double kloosterman_sum_avx2(long m, long n, long ell);

// tau(ell) * sqrt(gcd(m,n,ell)) * sqrt(ell).
double weil_bound(long m, long n, long ell);

long euler_phi(long ell);
long divisor_count(long ell);

// Upper bound for sum_{ell > L} tau(ell) * ell^{-x}, x > 1. Used for
// Dirichlet-series tail estimates.
double divisor_tail_bound(double L, double x);

}  // namespace kzeta
