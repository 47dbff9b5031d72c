#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "zonal/haar.hpp"
#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

/// Latent roots of a diagonal matrix.
struct DiagonalSpec {
  std::vector<Rational> eigenvalues;

  int n() const noexcept { return static_cast<int>(eigenvalues.size()); }
  std::vector<double> as_double() const;
  /// "1,2,1/3" style list.
  static DiagonalSpec parse(std::string_view text);
};

/// Dense square matrix with exact entries (row-major).
struct RationalMatrix {
  int n = 0;
  std::vector<Rational> entries;

  const Rational& operator()(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  }
  Eigen::MatrixXd to_eigen() const;
  static RationalMatrix diagonal(const DiagonalSpec& d);
  /// Rows separated by ';', entries by ','. "1,0;0,2" is diag(1, 2).
  static RationalMatrix parse(std::string_view text);
};

struct MomentReport {
  Rational exact;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  double z_score = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t resampled = 0;  // draws rejected by a failed eigensolve

  void finalize_z();
};

struct McOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  Sampler sampler = Sampler::angles;
};

/// n(n+2)⋯(n+2f−2); 1 for f = 0.
BigInt c_n(int n, int f);

/// ∫ (tr D_A Q D_B Qᵀ)^f over Haar O(n), in closed form through the zonal expansion.
Rational exact_trace_power_integral(const DiagonalSpec& a, const DiagonalSpec& b, int f);

/// Coefficient a_{g;h} of m_g(β) m_h(l) in ∫ (tr D_β Q D_l Qᵀ)^f over O(n).
Rational coefficient_extract(int f, int n, const Partition& g, const Partition& h);

/// a′_{g;h} = (2f−1)!!·c_n·a_{g;h} − b_{(f),g}·b_{(f),h}, evaluated at two dimensions.
struct ResidualReport {
  int n1 = 0, n2 = 0;
  Rational at_n1, at_n2;
  bool n_independent = false;
  /// at_n1 when n_independent, otherwise unset.
  std::optional<Rational> value;
};
/// Throws std::invalid_argument for g or h equal to (f) or on a weight mismatch.
/// Default dimensions are n1 = max(2, f) and n2 = n1 + 1.
ResidualReport residual_coefficients(int f, const Partition& g, const Partition& h, int n1 = 0,
                                     int n2 = 0);

MomentReport mc_trace_power_integral(const DiagonalSpec& a, const DiagonalSpec& b, int f,
                                     const McOptions& opt);

/// Monte Carlo of Z_κ at the eigenvalues of A H B Hᵀ against Z_κ(A) Z_κ(B) / Z_κ(I_n).
/// Requires A or B entrywise nonnegative.
MomentReport mc_zonal_splitting(const Partition& kappa, const DiagonalSpec& a, const DiagonalSpec& b,
                                const McOptions& opt);

/// Closed form of ∫ (tr A H)^f: zero for odd f, otherwise
/// Σ_{κ ⊢ f/2} χ_{2κ}(1) Z_κ(AAᵀ) / Z_κ(I_n).
Rational exact_trace_ah_integral(const RationalMatrix& a, int f);
MomentReport mc_trace_ah(const RationalMatrix& a, int f, const McOptions& opt);

struct SeriesResult {
  std::vector<Rational> terms;  // terms[f] = ∫(tr)^f / (2^f f!)
  Rational partial_sum;
  double value = 0.0;
  /// Upper bound on the omitted tail, only for entrywise nonnegative spectra.
  std::optional<double> tail_bound;
};

/// Σ_{f ≤ maxDegree} ∫ (tr D_A Q D_B Qᵀ)^f / (2^f f!), the series of ∫ exp(½ tr D_A Q D_B Qᵀ).
SeriesResult hyper0f0(const DiagonalSpec& a, const DiagonalSpec& b, int max_degree);

/// Monte Carlo mean of exp(½ tr D_A Q D_B Qᵀ) against the truncated series.
MomentReport mc_exp_series(const DiagonalSpec& a, const DiagonalSpec& b, int max_degree,
                           const McOptions& opt);

}  // namespace zonal
