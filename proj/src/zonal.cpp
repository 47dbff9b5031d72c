#include "zonal/zonal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "zonal/golden.hpp"

namespace zonal {

const SymPoly& ZonalTable::row(const Partition& kappa) const {
  for (std::size_t i = 0; i < kappas.size(); ++i)
    if (kappas[i] == kappa) return rows[i];
  throw std::out_of_range("no row " + kappa.str() + " in degree-" + std::to_string(degree) +
                          " table");
}

namespace {

/// Unnormalized b_{κ,g} for every g ≤ κ with at most max_length parts, seeded with b_{κ,κ} = 1.
std::map<Partition, Rational> recurse(const Partition& kappa, int max_length) {
  const int f = kappa.weight();
  const long rho_kappa = rho(kappa);
  // Descending lexicographic order refines dominance, so every h strictly
  // above g is final by the time g is reached.
  std::map<Partition, Rational> b;
  b.emplace(kappa, 1);
  for (const Partition& g : partitions_of(f)) {
    if (g.length() > max_length || g >= kappa || !dominates(g, kappa)) continue;
    const std::vector<int>& gp = g.parts();
    const int len = g.length();
    Rational acc = 0;
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        for (int t = 1; t <= gp[static_cast<std::size_t>(j)]; ++t) {
          std::vector<int> h(gp);
          h[static_cast<std::size_t>(i)] += t;
          h[static_cast<std::size_t>(j)] -= t;
          std::sort(h.begin(), h.end(), std::greater<>());
          auto it = b.find(Partition(std::move(h)));
          if (it == b.end()) continue;  // h not dominated by κ
          acc += it->second * (gp[static_cast<std::size_t>(i)] - gp[static_cast<std::size_t>(j)] + 2 * t);
        }
    const long denom = rho_kappa - rho(g);
    if (denom == 0)
      throw std::logic_error("zonal_row: zero denominator at " + g.str() + " below " + kappa.str());
    if (acc != 0) b.emplace(g, acc / denom);
  }
  return b;
}

SymPoly scaled_row(int f, const std::map<Partition, Rational>& b, const Rational& scale) {
  SymPoly out(Basis::monomial, f);
  for (const auto& [lambda, c] : b) out.set(lambda, c * scale);
  return out;
}

}  // namespace

SymPoly zonal_row(const Partition& kappa) {
  if (kappa.empty()) throw std::invalid_argument("zonal_row: empty partition");
  const int f = kappa.weight();
  const auto b = recurse(kappa, f);
  const Partition bottom(std::vector<int>(static_cast<std::size_t>(f), 1));
  auto it = b.find(bottom);
  if (it == b.end() || it->second == 0)
    throw std::logic_error("zonal_row: vanishing m_{1^f} coefficient for " + kappa.str());
  return scaled_row(f, b, Rational(factorial(static_cast<unsigned long>(f))) / it->second);
}

SymPoly zonal_row(const Partition& kappa, int max_length) {
  if (kappa.empty()) throw std::invalid_argument("zonal_row: empty partition");
  if (kappa.length() > max_length) return SymPoly(Basis::monomial, kappa.weight());
  return scaled_row(kappa.weight(), recurse(kappa, max_length), Rational(leading_coefficient(kappa)));
}

BigInt leading_coefficient(const Partition& kappa) {
  const Partition conj = conjugate(kappa);
  BigInt out = 1;
  for (int i = 0; i < kappa.length(); ++i)
    for (int j = 0; j < kappa[static_cast<std::size_t>(i)]; ++j) {
      const int arm = kappa[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      out *= 2 * arm + leg + 1;
    }
  return out;
}

std::shared_ptr<const ZonalTable> zonal_table(int f, int n) {
  if (f < 1) throw std::invalid_argument("zonal_table: degree must be at least 1");
  if (n < 1) throw std::invalid_argument("zonal_table: n must be positive");
  if (n >= f) return zonal_table(f);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ZonalTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{f, n}];
  if (!slot) {
    auto table = std::make_shared<ZonalTable>();
    table->degree = f;
    for (const auto& kappa : partitions_of(f)) {
      if (kappa.length() > n) continue;
      table->kappas.push_back(kappa);
      table->rows.push_back(zonal_row(kappa, n));
    }
    slot = std::move(table);
  }
  return slot;
}

std::shared_ptr<const ZonalTable> zonal_table(int f) {
  if (f < 1) throw std::invalid_argument("zonal_table: degree must be at least 1");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ZonalTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[f];
  if (!slot) {
    auto table = std::make_shared<ZonalTable>();
    table->degree = f;
    table->kappas = partitions_of(f);
    for (const auto& kappa : table->kappas) table->rows.push_back(zonal_row(kappa));
    slot = std::move(table);
  }
  return slot;
}

std::shared_ptr<const std::vector<SymPoly>> zonal_powersum_rows(int f) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<SymPoly>>> cache;
  auto table = zonal_table(f);
  std::lock_guard lock(mu);
  auto& slot = cache[f];
  if (!slot) {
    auto rows = std::make_shared<std::vector<SymPoly>>();
    for (const auto& r : table->rows) rows->push_back(m_to_p(r));
    slot = std::move(rows);
  }
  return slot;
}

SymPoly zonal_in_powersums(const Partition& kappa) {
  const auto table = zonal_table(kappa.weight());
  const auto rows = zonal_powersum_rows(kappa.weight());
  const auto pos = std::find(table->kappas.begin(), table->kappas.end(), kappa) - table->kappas.begin();
  const SymPoly& p = (*rows)[static_cast<std::size_t>(pos)];
  for (const auto& [lambda, c] : p.terms())
    if (c.get_den() != 1)
      throw std::runtime_error("zonal polynomial " + kappa.str() + " has non-integer power-sum coefficient " +
                               c.get_str() + " at " + lambda.str());
  return p;
}

Rational zonal_at_identity(const Partition& kappa, int n) {
  if (n < 1) throw std::invalid_argument("zonal_at_identity: n must be positive");
  if (kappa.empty()) return 1;
  if (kappa.length() > n) return 0;
  const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
  return evaluate(zonal_table(kappa.weight(), n)->row(kappa), ones);
}

BigInt trace_identity_ratio(int f) { return double_factorial(2L * f - 1); }

TraceIdentityReport check_trace_identity(const ZonalTable& table) {
  const int f = table.degree;
  SymPoly diff(Basis::monomial, f);
  for (std::size_t i = 0; i < table.kappas.size(); ++i)
    diff += table.rows[i] * Rational(sym_group_degree(table.kappas[i].scaled(2)));
  diff -= p_to_m(Partition(std::vector<int>(static_cast<std::size_t>(f), 1))) *
          Rational(trace_identity_ratio(f));
  TraceIdentityReport report;
  report.holds = diff.is_zero();
  report.discrepancy = std::move(diff);
  return report;
}

TraceIdentityReport check_trace_identity(int f) { return check_trace_identity(*zonal_table(f)); }

bool z_top_check(const ZonalTable& table) {
  const int f = table.degree;
  const SymPoly& top = table.row(Partition{f});
  const Partition bottom(std::vector<int>(static_cast<std::size_t>(f), 1));
  return top.coeff(Partition{f}) == Rational(double_factorial(2L * f - 1)) &&
         top.coeff(bottom) == Rational(factorial(static_cast<unsigned long>(f)));
}

bool z_top_check(int f) { return z_top_check(*zonal_table(f)); }

namespace {

void note(CheckResult& r, Severity s, const std::string& text) {
  r.severity = s;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += text;
}

}  // namespace

std::vector<CheckResult> verify_table(const ZonalTable& table) {
  const int f = table.degree;
  const std::string tag = "f=" + std::to_string(f) + " ";
  std::vector<CheckResult> out;

  const auto golden = golden_rows(f);
  if (!golden.empty()) {
    CheckResult r{tag + "golden table", Severity::pass, ""};
    for (const auto& g : golden) {
      SymPoly got = m_to_p(table.row(g.kappa));
      if (!(got == g.powersums)) {
        note(r, Severity::fail, "row " + g.kappa.str() + ": got " + got.str() + ", expected " + g.powersums.str());
      }
    }
    if (r.severity == Severity::pass)
      r.detail = std::to_string(golden.size()) + " rows match";
    out.push_back(std::move(r));
  }

  {
    auto report = check_trace_identity(table);
    out.push_back({tag + "trace identity", report.holds ? Severity::pass : Severity::fail,
                   report.holds ? "" : "discrepancy " + report.discrepancy.str()});
  }

  out.push_back({tag + "Z_(f) top coefficients", z_top_check(table) ? Severity::pass : Severity::fail, ""});

  {
    CheckResult norm{tag + "normalization", Severity::pass, ""};
    CheckResult tri{tag + "triangularity", Severity::pass, ""};
    CheckResult integral{tag + "nonnegative integers", Severity::pass, ""};
    const Partition bottom(std::vector<int>(static_cast<std::size_t>(f), 1));
    const Rational ffact(factorial(static_cast<unsigned long>(f)));
    for (std::size_t i = 0; i < table.kappas.size(); ++i) {
      const auto& kappa = table.kappas[i];
      const auto& row = table.rows[i];
      if (row.coeff(bottom) != ffact) {
        note(norm, Severity::fail, "row " + kappa.str() + " has m_{1^f} coefficient " + row.coeff(bottom).get_str());
      }
      for (const auto& [lambda, c] : row.terms()) {
        if (!dominates(lambda, kappa)) {
          note(tri, Severity::fail, "row " + kappa.str() + " has term m[" + lambda.str() + "]");
        }
        if (c < 0 || c.get_den() != 1) {
          note(integral, Severity::warning, "row " + kappa.str() + " coefficient " + c.get_str() + " at " + lambda.str());
        }
      }
    }
    out.push_back(std::move(norm));
    out.push_back(std::move(tri));
    out.push_back(std::move(integral));
  }
  return out;
}

}  // namespace zonal
