#pragma once

// Distributional checks on the Haar samplers, shared by the unit and acceptance tests.

#include <cmath>
#include <string>
#include <vector>

#include "zonal/haar.hpp"
#include "zonal/stats.hpp"

namespace battery {

struct Draws {
  std::vector<double> trace, q11, q11_sq;
  zonal::RunningStats sq, fourth, negative_det, corner_sq, row_end_sq;
};

/// Quantized to 1e-9 so that atoms of the law (tr Q = 0 for reflections in O(2))
/// compare as ties instead of splitting on rounding noise.
inline double snap(double x) { return std::round(x * 1e9) / 1e9; }

/// `left` multiplies every draw, for invariance checks.
inline Draws draw(zonal::Sampler which, int n, std::size_t count, std::uint64_t seed,
                  const Eigen::MatrixXd* left = nullptr) {
  zonal::Rng rng(seed);
  Draws d;
  d.trace.reserve(count);
  d.q11.reserve(count);
  d.q11_sq.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Eigen::MatrixXd q = zonal::sample(which, n, rng);
    if (left) q = *left * q;
    const double x = q(0, 0);
    d.trace.push_back(snap(q.trace()));
    d.q11.push_back(snap(x));
    d.q11_sq.push_back(snap(x * x));
    d.sq.add(x * x);
    d.fourth.add(x * x * x * x);
    d.negative_det.add(q.determinant() < 0 ? 1.0 : 0.0);
    d.corner_sq.add(q(n - 1, 0) * q(n - 1, 0));
    d.row_end_sq.add(q(0, n - 1) * q(0, n - 1));
  }
  return d;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

inline Check within_3se(std::string name, const zonal::RunningStats& s, double expected) {
  const double diff = s.mean() - expected;
  const double z = s.std_error() > 0 ? diff / s.std_error() : (std::abs(diff) < 1e-12 ? 0.0 : INFINITY);
  return {std::move(name), std::abs(z) <= 3.0,
          "mean " + std::to_string(s.mean()) + " expected " + std::to_string(expected) + " z " +
              std::to_string(z)};
}

inline Check ks(std::string name, const std::vector<double>& a, const std::vector<double>& b) {
  const auto r = zonal::ks_two_sample(a, b, 0.01);
  return {std::move(name), !r.reject,
          "D " + std::to_string(r.statistic) + " critical " + std::to_string(r.critical) + " p " +
              std::to_string(r.p_value)};
}

/// KS agreement of tr Q, q11 and q11² between the two samplers, plus moment and sign checks.
inline std::vector<Check> sampler_battery(int n, std::size_t count, std::uint64_t seed) {
  const Draws a = draw(zonal::Sampler::angles, n, count, seed);
  const Draws o = draw(zonal::Sampler::oracle, n, count, seed + 1);
  const std::string tag = "n=" + std::to_string(n) + " ";
  const double dn = n;
  std::vector<Check> out;
  out.push_back(ks(tag + "KS tr Q", a.trace, o.trace));
  out.push_back(ks(tag + "KS q11", a.q11, o.q11));
  out.push_back(ks(tag + "KS q11^2", a.q11_sq, o.q11_sq));
  out.push_back(within_3se(tag + "det sign", a.negative_det, 0.5));
  out.push_back(within_3se(tag + "E q11^2", a.sq, 1.0 / dn));
  out.push_back(within_3se(tag + "E q11^4", a.fourth, 3.0 / (dn * (dn + 2))));
  out.push_back(within_3se(tag + "E qn1^2", a.corner_sq, 1.0 / dn));
  out.push_back(within_3se(tag + "E q1n^2", a.row_end_sq, 1.0 / dn));
  out.push_back(within_3se(tag + "oracle E q11^2", o.sq, 1.0 / dn));
  return out;
}

}  // namespace battery
