#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace zonal {

using Rng = std::mt19937_64;
using OrthoMatrix = Eigen::MatrixXd;

/// Rotation angles θ_ij (1 ≤ i ≤ j ≤ n−1) and reflection bits parametrizing an
/// orthogonal matrix. θ_ij rotates the (j, j+1) coordinate plane while building
/// column i; its volume-element exponent is n − j − 1. Angles with a positive
/// exponent live in [0, π], the others in [0, 2π).
class AngleSet {
 public:
  explicit AngleSet(int n);

  int n() const noexcept { return n_; }
  /// 1-based indices, 1 ≤ i ≤ j ≤ n−1.
  double& angle(int i, int j);
  double angle(int i, int j) const;
  std::vector<bool>& reflections() noexcept { return reflections_; }
  const std::vector<bool>& reflections() const noexcept { return reflections_; }

  /// Number of angles, n(n−1)/2.
  std::size_t size() const noexcept { return angles_.size(); }
  const std::vector<double>& raw_angles() const noexcept { return angles_; }

  /// All angles inside their documented ranges.
  bool valid() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<double> angles_;
  std::vector<bool> reflections_;
};

/// Exponent of sin θ_ij in the Haar volume element.
inline int density_exponent(int n, int j) { return n - j - 1; }

/// Q = U^ε · W_1 ⋯ W_{n−1}, where U^ε = diag((−1)^{ε_i}) and
/// W_i = V_{n−1}(θ_{i,n−1}) ⋯ V_i(θ_ii); V_k(θ) acts on the (k, k+1) plane.
OrthoMatrix realize(const AngleSet& angles);

/// Plane rotation diag(I_{k−1}, V(θ), I_{n−k−1}) with V(θ) = [[cos, sin], [−sin, cos]].
OrthoMatrix plane_rotation(int n, int k, double theta);

/// Angles drawn from the Haar volume element, reflection bits fair.
AngleSet sample_angles(int n, Rng& rng);

/// Haar-distributed orthogonal matrix via the angle decomposition.
OrthoMatrix sample_orthogonal(int n, Rng& rng);

/// Independent Haar sampler: modified Gram-Schmidt on a Gaussian matrix.
OrthoMatrix oracle_sample(int n, Rng& rng);

/// max |QᵀQ − I| < tol.
bool orthogonality_check(const OrthoMatrix& q, double tol);

enum class Sampler { angles, oracle };
OrthoMatrix sample(Sampler which, int n, Rng& rng);

}  // namespace zonal
