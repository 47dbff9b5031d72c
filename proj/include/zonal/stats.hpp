#pragma once

#include <cstdint>
#include <vector>

namespace zonal {

/// Streaming mean/variance (Welford), mergeable across shards.
class RunningStats {
 public:
  void add(double x) noexcept;
  void merge(const RunningStats& other) noexcept;

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; zero with fewer than two observations.
  double variance() const noexcept;
  double std_error() const noexcept;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// SplitMix64 step, used to derive independent per-shard seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) noexcept;

struct KsResult {
  double statistic = 0.0;  // sup |F_a − F_b|
  double p_value = 1.0;    // asymptotic Kolmogorov distribution
  double critical = 0.0;   // rejection threshold at the requested α
  bool reject = false;
};

/// Two-sample Kolmogorov-Smirnov test. Ties are handled by stepping both
/// empirical CDFs past equal values together.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha = 0.01);

/// P(K > x) for the Kolmogorov distribution.
double kolmogorov_survival(double x);

}  // namespace zonal
