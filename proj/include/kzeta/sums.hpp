#pragma once

#include <string>
#include <vector>

#include "kzeta/continuation.hpp"
#include "kzeta/dataset.hpp"
#include "kzeta/types.hpp"

namespace kzeta {

struct CutoffReport {
  double X = 0.0;
  double sum_value = 0.0;
  double bound_value = 0.0;
  double ratio = 0.0;
  long m = 0, n = 0;
  double eps = 0.0, theta = 0.0;
};

struct GrowthSample {
  double sigma = 0.0;
  double t = 0.0;
  double abs_value = 0.0;
  Method method = Method::dirichlet;
  bool skipped = false;
  std::string note;
};

// Sharp cutoff sum S_{m,-n}(X) = sum_{ell <= X} S(m,-n;ell)/ell, m,n > 0.
double cutoff_sum(long m, long n, double X, int threads = 1);

// X^{1/6+eps} (gcd(m,n)^eps + (mn)^theta) + X^eps (mn)^{1/4+eps},
// implied constant 1.
double cutoff_bound(long m, long n, double X, double eps, double theta);

// One report per grid point, single batch pass over ell <= max X.
// Deterministic for any thread count.
std::vector<CutoffReport> cutoff_scan(long m, long n,
                                      const std::vector<double>& X_grid,
                                      double eps, double theta,
                                      int threads = 1);

// |Z_{m,-n}(sigma + i t)| along a vertical line via evaluate(). Points that
// fail (pole proximity etc.) come back flagged, not fatal.
std::vector<GrowthSample> growth_scan(long m, long n, double sigma,
                                      const std::vector<double>& t_grid,
                                      const SpectralDataset& ds,
                                      const ToleranceConfig& cfg,
                                      const std::vector<double>& zero_heights = {});

// CSV emission, 17 significant digits, header row, atomic replace.
void write_cutoff_csv(const std::vector<CutoffReport>& reports,
                      const std::string& path);
void write_growth_csv(const std::vector<GrowthSample>& samples,
                      const std::string& path);
std::vector<CutoffReport> read_cutoff_csv(const std::string& path);

}  // namespace kzeta
