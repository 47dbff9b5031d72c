#include "zonal/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace zonal {

std::string to_string(Basis b) { return b == Basis::monomial ? "monomial" : "powersum"; }

Basis parse_basis(std::string_view text) {
  if (text == "monomial") return Basis::monomial;
  if (text == "powersum") return Basis::powersum;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

SymPoly SymPoly::basis_element(Basis basis, const Partition& lambda) {
  SymPoly p(basis, lambda.weight());
  p.set(lambda, 1);
  return p;
}

void SymPoly::check_key(const Partition& lambda) const {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("partition " + lambda.str() + " does not have weight " +
                                std::to_string(degree_));
}

void SymPoly::check_compatible(const SymPoly& other) const {
  if (basis_ != other.basis_) throw std::invalid_argument("symmetric polynomial basis mismatch");
  if (degree_ != other.degree_) throw std::invalid_argument("symmetric polynomial degree mismatch");
}

Rational SymPoly::coeff(const Partition& lambda) const {
  check_key(lambda);
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::set(const Partition& lambda, const Rational& value) {
  check_key(lambda);
  if (value == 0) {
    terms_.erase(lambda);
    return;
  }
  Rational& slot = terms_[lambda];
  slot = value;
  slot.canonicalize();
}

void SymPoly::add_to(const Partition& lambda, const Rational& value) {
  check_key(lambda);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, value);
  if (inserted)
    it->second.canonicalize();
  else if ((it->second += value) == 0)
    terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  check_compatible(other);
  for (const auto& [k, v] : other.terms_) add_to(k, v);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  check_compatible(other);
  for (const auto& [k, v] : other.terms_) add_to(k, -v);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) {
    v *= c;
    v.canonicalize();
  }
  return *this;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  const char sym = basis_ == Basis::monomial ? 'm' : 'p';
  std::string out;
  // Descending lexicographic, matching partitions_of.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str() + "*" + sym + "[" + it->first.str() + "]";
  }
  return out;
}

SymPoly multiply_by_power_sum(const SymPoly& poly, int k) {
  if (poly.basis() != Basis::monomial)
    throw std::invalid_argument("multiply_by_power_sum expects the monomial basis");
  if (k <= 0) throw std::invalid_argument("power sum index must be positive");
  SymPoly out(Basis::monomial, poly.degree() + k);
  for (const auto& [lambda, c] : poly.terms()) {
    // Targets: add k to one part (one per distinct value) or append a new part k.
    std::set<Partition> targets;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) continue;
      std::vector<int> mu(parts);
      mu[i] += k;
      std::sort(mu.begin(), mu.end(), std::greater<>());
      targets.insert(Partition(std::move(mu)));
    }
    {
      std::vector<int> mu(parts);
      mu.push_back(k);
      std::sort(mu.begin(), mu.end(), std::greater<>());
      targets.insert(Partition(std::move(mu)));
    }
    for (const Partition& mu : targets) {
      // Coefficient: Σ over distinct values v of μ whose reduction by k gives λ, of mult_v(μ).
      long count = 0;
      const auto& mp = mu.parts();
      for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i > 0 && mp[i] == mp[i - 1]) continue;
        const int v = mp[i];
        if (v < k) continue;
        std::vector<int> reduced(mp);
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        if (v > k) reduced.push_back(v - k);
        std::sort(reduced.begin(), reduced.end(), std::greater<>());
        if (reduced == parts) count += std::count(mp.begin(), mp.end(), v);
      }
      if (count) out.add_to(mu, c * count);
    }
  }
  return out;
}

SymPoly p_to_m(const Partition& lambda) {
  SymPoly acc = SymPoly::basis_element(Basis::monomial, Partition());
  for (int k : lambda.parts()) acc = multiply_by_power_sum(acc, k);
  return acc;
}

SymPoly p_to_m(const SymPoly& poly) {
  if (poly.basis() == Basis::monomial) return poly;
  SymPoly out(Basis::monomial, poly.degree());
  for (const auto& [lambda, c] : poly.terms()) out += p_to_m(lambda) * c;
  return out;
}

namespace {

/// Inverse of the p -> m transition matrix for one degree. Rows and columns are
/// indexed by partitions_of(degree).
struct BasisChange {
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> m_to_p;  // m_to_p[λ][μ]: coefficient of p_λ in m_μ
};

std::shared_ptr<const BasisChange> build_basis_change(int degree) {
  auto bc = std::make_shared<BasisChange>();
  bc->index = partitions_of(degree);
  const std::size_t n = bc->index.size();
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(bc->index[i], i);

  // a[μ][λ] = coefficient of m_μ in p_λ, augmented with the identity.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t col = 0; col < n; ++col) {
    const SymPoly image = p_to_m(bc->index[col]);
    for (const auto& [mu, c] : image.terms()) a[pos.at(mu)][col] = c;
  }
  for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;

  // Gauss-Jordan elimination over the rationals.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("power-sum transition matrix is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c)
        if (a[col][c] != 0) a[r][c] -= factor * a[col][c];
    }
  }
  bc->m_to_p.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bc->m_to_p[i][j] = a[i][n + j];
  return bc;
}

std::shared_ptr<const BasisChange> basis_change(int degree) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const BasisChange>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = build_basis_change(degree);
  return slot;
}

template <class T>
T monomial_value_impl(const Partition& lambda, std::span<const T> x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return T(0);
  // Distinct part values with their remaining multiplicities; zeros fill the rest.
  std::vector<std::pair<int, int>> pool;
  for (int p : lambda.parts()) {
    if (!pool.empty() && pool.back().first == p)
      ++pool.back().second;
    else
      pool.emplace_back(p, 1);
  }
  int zeros = n - lambda.length();

  // Enumerates each distinct rearrangement exactly once.
  auto recurse = [&](auto&& self, int var, T prefix) -> T {
    if (var == n) return prefix;
    T total(0);
    if (zeros > 0) {
      --zeros;
      total += self(self, var + 1, prefix);
      ++zeros;
    }
    for (auto& [value, left] : pool) {
      if (left == 0) continue;
      --left;
      T term = prefix;
      for (int e = 0; e < value; ++e) term *= x[static_cast<std::size_t>(var)];
      total += self(self, var + 1, term);
      ++left;
    }
    return total;
  };
  return recurse(recurse, 0, T(1));
}

template <class T>
T evaluate_power_sums_impl(const SymPoly& poly, std::span<const T> power) {
  if (poly.basis() != Basis::powersum)
    throw std::invalid_argument("evaluate_power_sums expects the power-sum basis");
  if (power.size() <= static_cast<std::size_t>(poly.degree()))
    throw std::invalid_argument("evaluate_power_sums: not enough power sums");
  T total(0);
  for (const auto& [lambda, c] : poly.terms()) {
    T term(1);
    for (int k : lambda.parts()) term *= power[static_cast<std::size_t>(k)];
    if constexpr (std::is_same_v<T, double>)
      total += c.get_d() * term;
    else
      total += c * term;
  }
  return total;
}

template <class T>
T evaluate_impl(const SymPoly& poly, std::span<const T> x) {
  T total(0);
  if (poly.basis() == Basis::monomial) {
    for (const auto& [lambda, c] : poly.terms()) {
      if constexpr (std::is_same_v<T, double>)
        total += c.get_d() * monomial_value_impl(lambda, x);
      else
        total += c * monomial_value_impl(lambda, x);
    }
    return total;
  }
  std::vector<T> power(static_cast<std::size_t>(poly.degree()) + 1, T(0));
  for (std::size_t k = 1; k < power.size(); ++k)
    for (const T& xi : x) {
      T v(1);
      for (std::size_t e = 0; e < k; ++e) v *= xi;
      power[k] += v;
    }
  return evaluate_power_sums_impl(poly, std::span<const T>(power));
}

}  // namespace

SymPoly m_to_p(const SymPoly& poly) {
  if (poly.basis() == Basis::powersum) return poly;
  auto bc = basis_change(poly.degree());
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < bc->index.size(); ++i) pos.emplace(bc->index[i], i);
  SymPoly out(Basis::powersum, poly.degree());
  for (std::size_t i = 0; i < bc->index.size(); ++i) {
    Rational acc = 0;
    for (const auto& [mu, c] : poly.terms()) acc += bc->m_to_p[i][pos.at(mu)] * c;
    out.set(bc->index[i], acc);
  }
  return out;
}

Rational evaluate(const SymPoly& poly, std::span<const Rational> x) { return evaluate_impl(poly, x); }
double evaluate(const SymPoly& poly, std::span<const double> x) { return evaluate_impl(poly, x); }

Rational evaluate_power_sums(const SymPoly& poly, std::span<const Rational> power) {
  return evaluate_power_sums_impl(poly, power);
}
double evaluate_power_sums(const SymPoly& poly, std::span<const double> power) {
  return evaluate_power_sums_impl(poly, power);
}

Rational monomial_value(const Partition& lambda, std::span<const Rational> x) {
  return monomial_value_impl(lambda, x);
}
double monomial_value(const Partition& lambda, std::span<const double> x) {
  return monomial_value_impl(lambda, x);
}

}  // namespace zonal
