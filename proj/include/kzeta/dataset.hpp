#pragma once

#include <string>
#include <vector>

#include "kzeta/types.hpp"

namespace kzeta {

// One even/odd Hecke-Maass cusp form for the full modular group.
// Laplace eigenvalue 1/4 + t^2; nu = |rho(1)|^2 / cosh(pi t); lambda[k] is
// the Hecke eigenvalue of index k+1 (lambda[0] = 1).
struct MaassFormRecord {
  double t = 0.0;
  int parity = +1;  // +1 even, -1 odd
  double nu = 0.0;
  std::vector<double> lambda;
};

struct SpectralDataset {
  std::vector<MaassFormRecord> forms;  // sorted by t ascending
  long n_max = 0;
  double t_max = 0.0;
  std::string source;

  double lambda(std::size_t j, long n) const;  // 1-based coefficient index
};

// Parses and validates the JSON schema
//   {"level":1, "n_max":N, "source":"...", "forms":[{"t":..,"parity":..,
//    "nu":..,"lambda":[1.0, ...]}, ...]}
// Checks: forms sorted by t, lambda[0] = 1, nu > 0, multiplicativity
// lambda(p)lambda(q) = lambda(pq) for coprime p*q <= n_max.
SpectralDataset load_dataset(const std::string& path);

// Writes the dataset back out in the same schema.
void save_dataset(const SpectralDataset& ds, const std::string& path);

// Deterministic synthetic dataset: leading spectral parameters and parities
// from published level-1 tables, the remainder on a Weyl-law grid up to
// t_max, Hecke-multiplicative coefficients driven by a seeded RNG.
SpectralDataset make_synthetic_dataset(double t_max, long n_max,
                                       unsigned long long seed);

}  // namespace kzeta
