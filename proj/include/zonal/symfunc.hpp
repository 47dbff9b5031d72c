#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

enum class Basis { monomial, powersum };

std::string to_string(Basis b);
Basis parse_basis(std::string_view text);

/// Homogeneous symmetric polynomial of a fixed degree, stored sparsely as
/// partition -> coefficient in either the monomial basis m_λ or the power-sum
/// basis p_λ = p_{λ1} p_{λ2} ... Zero coefficients are never stored.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  SymPoly(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  /// The single basis element indexed by λ.
  static SymPoly basis_element(Basis basis, const Partition& lambda);

  Basis basis() const noexcept { return basis_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Zero if λ is absent. Throws std::invalid_argument on a weight mismatch.
  Rational coeff(const Partition& lambda) const;
  void set(const Partition& lambda, const Rational& value);
  void add_to(const Partition& lambda, const Rational& value);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  /// Exact structural equality. Throws on degree or basis mismatch.
  friend bool operator==(const SymPoly& a, const SymPoly& b);

  /// Human-readable form such as "3*m[2] + 2*m[1,1]".
  std::string str() const;

 private:
  void check_compatible(const SymPoly& other) const;
  void check_key(const Partition& lambda) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

/// m-basis product poly * p_k.
SymPoly multiply_by_power_sum(const SymPoly& poly, int k);

/// Monomial expansion of p_λ.
SymPoly p_to_m(const Partition& lambda);

/// Power-sum representation of a monomial-basis polynomial.
SymPoly m_to_p(const SymPoly& poly);

/// Monomial representation of a power-sum-basis polynomial.
SymPoly p_to_m(const SymPoly& poly);

/// Evaluation at the variables x_1..x_n (n = x.size()).
Rational evaluate(const SymPoly& poly, std::span<const Rational> x);
double evaluate(const SymPoly& poly, std::span<const double> x);

/// Power-sum-basis evaluation from precomputed power sums: power[k] = p_k(x),
/// power.size() > poly.degree().
Rational evaluate_power_sums(const SymPoly& poly, std::span<const Rational> power);
double evaluate_power_sums(const SymPoly& poly, std::span<const double> power);

/// m_λ(x): sum over distinct rearrangements of λ padded to x.size() parts.
Rational monomial_value(const Partition& lambda, std::span<const Rational> x);
double monomial_value(const Partition& lambda, std::span<const double> x);

}  // namespace zonal
