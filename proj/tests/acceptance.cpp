// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "battery.hpp"
#include "cli.hpp"
#include "oracles.hpp"
#include "zonal/golden.hpp"
#include "zonal/moments.hpp"
#include "zonal/zonal.hpp"

using namespace zonal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) o.fail("took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("%s  %d  %s  (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

DiagonalSpec spec(std::initializer_list<Rational> v) { return DiagonalSpec{std::vector<Rational>(v)}; }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome golden_tables() {
  Outcome o;
  const char* argv[] = {"zonal", "verify", "--f", "1..6"};
  std::ostringstream out, err;
  const int code = cli::run(4, argv, out, err);
  if (code != 0) o.fail("verify exited " + std::to_string(code));
  const std::string text = out.str();
  for (int f = 1; f <= 6; ++f) {
    const std::string line = "PASS  f=" + std::to_string(f) + " golden table";
    if (text.find(line) == std::string::npos) o.fail("no golden PASS line for f=" + std::to_string(f));
  }
  std::size_t rows = 0;
  for (int f = 1; f <= 6; ++f) rows += golden_rows(f).size();
  o.detail = o.ok ? std::to_string(rows) + " rows equal after basis conversion" : o.detail;
  return o;
}

Outcome trace_identity() {
  Outcome o;
  for (int f = 1; f <= 8; ++f) {
    const auto r = check_trace_identity(f);
    if (!r.holds) o.fail("f=" + std::to_string(f) + ": " + r.discrepancy.str());
  }
  return o;
}

Outcome character_degrees() {
  Outcome o;
  for (const auto& g : golden_chi())
    if (sym_group_degree(g.kappa.scaled(2)) != g.chi) o.fail("chi mismatch at " + g.kappa.str());
  if (o.ok) o.detail = std::to_string(golden_chi().size()) + " values";
  return o;
}

Outcome coefficient_formulas() {
  Outcome o;
  for (int f = 1; f <= 4; ++f) {
    const Partition top{f}, ones(std::vector<int>(static_cast<std::size_t>(f), 1));
    for (int n = 2; n <= 5; ++n) {
      const Rational cn(c_n(n, f));
      if (coefficient_extract(f, n, top, top) != Rational(oracle::dfact(2 * f - 1)) / cn)
        o.fail("a_{f;f} at f=" + std::to_string(f) + " n=" + std::to_string(n));
      if (coefficient_extract(f, n, top, ones) != Rational(factorial(static_cast<unsigned long>(f))) / cn)
        o.fail("a_{f;1^f} at f=" + std::to_string(f) + " n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "a_{f;f} and a_{f;1^f} exact for f<=4, n=2..5";
  int dependent = 0, total = 0;
  std::string first;
  for (int f = 2; f <= 3; ++f)
    for (const auto& g : partitions_of(f))
      for (const auto& h : partitions_of(f)) {
        if (g == Partition{f} || h == Partition{f}) continue;
        ++total;
        const auto r = residual_coefficients(f, g, h);
        if (r.n_independent) continue;
        ++dependent;
        if (first.empty())
          first = "f=" + std::to_string(f) + " g=(" + g.str() + ") h=(" + h.str() + "): " + r.at_n1.get_str() +
                  " at n=" + std::to_string(r.n1) + ", " + r.at_n2.get_str() + " at n=" + std::to_string(r.n2);
      }
  if (dependent)
    o.fail("residual depends on n for " + std::to_string(dependent) + " of " + std::to_string(total) +
           " pairs, e.g. " + first);
  return o;
}

Outcome top_structure() {
  Outcome o;
  for (int f = 1; f <= 8; ++f)
    if (!z_top_check(f)) o.fail("Z_(f) top coefficients at f=" + std::to_string(f));
  for (int f = 1; f <= 4; ++f)
    for (int n = 1; n <= 5; ++n)
      if (zonal_at_identity({f}, n) != Rational(c_n(n, f)))
        o.fail("Z_(f)(I_n) at f=" + std::to_string(f) + " n=" + std::to_string(n));
  return o;
}

Outcome splitting() {
  Outcome o;
  struct Case {
    Partition kappa;
    DiagonalSpec a, b;
  };
  const std::vector<Case> cases{
      {{1}, spec({1, 2}), spec({3, 1})},
      {{2}, spec({1, 2}), spec({3, 1})},
      {{2}, spec({1, 2, 3}), spec({Rational(1, 2), 1, 2})},
      {{2, 1}, spec({1, 2, 3}), spec({Rational(1, 2), 1, 2})},
  };
  McOptions opt;
  opt.samples = 100000;
  opt.threads = 4;
  std::string zs;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    opt.seed = 1000 + i;
    const auto r = mc_zonal_splitting(cases[i].kappa, cases[i].a, cases[i].b, opt);
    zs += (zs.empty() ? "z = " : ", ") + fmt(r.z_score);
    if (std::abs(r.z_score) > 4) o.fail("kappa=(" + cases[i].kappa.str() + ") n=" + std::to_string(cases[i].a.n()));
  }
  o.detail = o.detail.empty() ? zs : o.detail + "; " + zs;
  return o;
}

Outcome sampler_validity() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : battery::sampler_battery(n, 100000, 500 + static_cast<std::uint64_t>(n)))
      if (!c.ok) o.fail(c.name + " (" + c.detail + ")");
  return o;
}

Outcome series() {
  Outcome o;
  McOptions opt;
  opt.samples = 1000000;
  opt.seed = 2024;
  opt.threads = 4;
  const auto a = spec({1, 2}), b = spec({1, 3});
  const auto s = hyper0f0(a, b, 12);
  const auto mc = mc_exp_series(a, b, 12, opt);
  const double rel = std::abs(mc.estimate / s.value - 1.0);
  if (rel > 0.01) o.fail("relative error " + fmt(rel));
  o.detail = "series " + fmt(s.value) + " vs MC " + fmt(mc.estimate) + " (rel " + fmt(rel) + ")";

  // A = aI: the f-th term must be (a tr B / 2)^f / f! exactly.
  for (const Rational& scale : {Rational(1), Rational(1, 3), Rational(-2)}) {
    const auto ai = spec({scale, scale, scale});
    const auto bb = spec({1, Rational(1, 2), 3});
    const Rational x = scale * Rational(9, 2) / 2;
    const auto r = hyper0f0(ai, bb, 16);
    Rational term = 1;
    for (int f = 0; f <= 16; ++f) {
      if (f > 0) term *= x / f;
      if (r.terms[static_cast<std::size_t>(f)] != term) o.fail("aI term mismatch at f=" + std::to_string(f));
    }
    if (std::abs(hyper0f0(ai, bb, 30).value - std::exp(x.get_d())) > 1e-9 * std::exp(x.get_d()))
      o.fail("aI series does not reach exp(a tr B / 2)");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (int f = 1; f <= 8; ++f) {
    const auto ps = partitions_of(f);
    for (const auto& a : ps) {
      if (!dominates(a, a)) o.fail("reflexivity");
      for (const auto& b : ps) {
        if (a != b && dominates(a, b) && dominates(b, a)) o.fail("antisymmetry");
        if (a != b && dominates(b, a) && rho(a) - rho(b) <= 0) o.fail("denominator at " + a.str() + "/" + b.str());
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c) && !dominates(a, c)) o.fail("transitivity");
      }
    }
  }
  for (int w = 1; w <= 8; ++w)
    for (const auto& l : partitions_of(w)) {
      const SymPoly m = SymPoly::basis_element(Basis::monomial, l);
      if (!(p_to_m(m_to_p(m)) == m)) o.fail("m round trip at " + l.str());
      const SymPoly p = SymPoly::basis_element(Basis::powersum, l);
      if (!(m_to_p(p_to_m(p)) == p)) o.fail("p round trip at " + l.str());
    }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (int f = 1; f <= 6; ++f)
    for (int n = 1; n <= 4; ++n) {
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        x.push_back(q);
      }
      const auto table = zonal_table(f);
      SymPoly sum(Basis::monomial, f);
      Rational pointwise = 0;
      for (std::size_t i = 0; i < table->rows.size(); ++i) {
        const Rational c(num(rng));
        sum += table->rows[i] * c;
        pointwise += c * evaluate(table->rows[i], x);
        if (evaluate(m_to_p(table->rows[i]), x) != evaluate(table->rows[i], x)) o.fail("basis-dependent value");
      }
      if (evaluate(sum, x) != pointwise) o.fail("evaluation is not linear");
      for (const auto& l : partitions_of(f)) {
        Rational product = 1;
        for (int k : l.parts()) {
          Rational pk = 0;
          for (const auto& xi : x) {
            Rational v = 1;
            for (int e = 0; e < k; ++e) v *= xi;
            pk += v;
          }
          product *= pk;
        }
        if (evaluate(p_to_m(l), x) != product) o.fail("p_lambda is not multiplicative at " + l.str());
      }
    }
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion(1, "golden tables f=1..6", 5, golden_tables);
  criterion(2, "trace identity f<=8", 30, trace_identity);
  criterion(3, "character degrees", 0, character_degrees);
  criterion(4, "coefficient formulas and n-free residuals", 0, coefficient_formulas);
  criterion(5, "Z_(f) structure", 0, top_structure);
  criterion(6, "Monte Carlo splitting", 60, splitting);
  criterion(7, "sampler validity", 0, sampler_validity);
  criterion(8, "series consistency", 0, series);
  criterion(9, "property suites", 300, properties);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 9 criteria failed (%.2f s)\n", failures, secs);
  return failures ? 1 : 0;
}
