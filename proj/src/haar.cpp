#include "zonal/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zonal {

AngleSet::AngleSet(int n)
    : n_(n),
      angles_(n >= 1 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 : 0, 0.0),
      reflections_(n >= 1 ? static_cast<std::size_t>(n) : 0, false) {
  if (n < 1) throw std::invalid_argument("AngleSet: dimension must be positive");
}

std::size_t AngleSet::index(int i, int j) const {
  if (i < 1 || j < i || j > n_ - 1) throw std::out_of_range("AngleSet: bad angle index");
  // Rows i = 1..n−1 hold n − i angles each.
  std::size_t offset = 0;
  for (int r = 1; r < i; ++r) offset += static_cast<std::size_t>(n_ - r);
  return offset + static_cast<std::size_t>(j - i);
}

double& AngleSet::angle(int i, int j) { return angles_[index(i, j)]; }
double AngleSet::angle(int i, int j) const { return angles_[index(i, j)]; }

bool AngleSet::valid() const {
  for (int i = 1; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      const double a = angle(i, j);
      if (density_exponent(n_, j) > 0) {
        if (!(a >= 0.0 && a <= std::numbers::pi)) return false;
      } else if (!(a >= 0.0 && a < 2 * std::numbers::pi)) {
        return false;
      }
    }
  return true;
}

namespace {

// Left-multiplies m by V_k(θ) (1-based k): rows k and k+1 mix.
void rotate_rows(Eigen::MatrixXd& m, int k, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Eigen::RowVectorXd top = m.row(k - 1);
  const Eigen::RowVectorXd bottom = m.row(k);
  m.row(k - 1) = c * top + s * bottom;
  m.row(k) = -s * top + c * bottom;
}

}  // namespace

OrthoMatrix plane_rotation(int n, int k, double theta) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  rotate_rows(m, k, theta);
  return m;
}

OrthoMatrix realize(const AngleSet& a) {
  const int n = a.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (int i = n - 1; i >= 1; --i)
    for (int j = i; j <= n - 1; ++j) rotate_rows(m, j, a.angle(i, j));
  for (int i = 0; i < n; ++i)
    if (a.reflections()[static_cast<std::size_t>(i)]) m.row(i) *= -1.0;
  return m;
}

AngleSet sample_angles(int n, Rng& rng) {
  AngleSet a(n);
  std::uniform_real_distribution<double> circle(0.0, 2 * std::numbers::pi);
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int k = density_exponent(n, j);
      if (k == 0) {
        a.angle(i, j) = circle(rng);
        continue;
      }
      // Density ∝ sin^k θ on [0, π]: cos θ = 2C − 1 with C ~ Beta((k+1)/2, (k+1)/2).
      std::gamma_distribution<double> gamma(0.5 * (k + 1), 1.0);
      const double g1 = gamma(rng), g2 = gamma(rng);
      const double c = g1 / (g1 + g2);
      a.angle(i, j) = std::acos(std::clamp(2.0 * c - 1.0, -1.0, 1.0));
    }
  std::bernoulli_distribution coin(0.5);
  for (auto&& bit : a.reflections()) bit = coin(rng);
  return a;
}

OrthoMatrix sample_orthogonal(int n, Rng& rng) { return realize(sample_angles(n, rng)); }

OrthoMatrix oracle_sample(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("oracle_sample: dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::MatrixXd q(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) q(r, c) = normal(rng);
    bool singular = false;
    for (int c = 0; c < n && !singular; ++c) {
      for (int p = 0; p < c; ++p) q.col(c) -= q.col(p).dot(q.col(c)) * q.col(p);
      const double norm = q.col(c).norm();
      if (norm < 1e-10) singular = true;
      else q.col(c) /= norm;
    }
    if (!singular) return q;
  }
}

bool orthogonality_check(const OrthoMatrix& q, double tol) {
  if (q.rows() != q.cols()) return false;
  const Eigen::MatrixXd e = q.transpose() * q - Eigen::MatrixXd::Identity(q.rows(), q.cols());
  return e.cwiseAbs().maxCoeff() < tol;
}

OrthoMatrix sample(Sampler which, int n, Rng& rng) {
  return which == Sampler::angles ? sample_orthogonal(n, rng) : oracle_sample(n, rng);
}

}  // namespace zonal
