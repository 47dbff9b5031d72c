#include <doctest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "zonal/golden.hpp"
#include "zonal/zonal.hpp"

using namespace zonal;

namespace {

Partition ones(int f) { return Partition(std::vector<int>(static_cast<std::size_t>(f), 1)); }

SymPoly mono(int degree, std::initializer_list<std::pair<long, Partition>> terms) {
  SymPoly p(Basis::monomial, degree);
  for (const auto& [c, l] : terms) p.add_to(l, c);
  return p;
}

}  // namespace

TEST_SUITE("zonal") {

TEST_CASE("single rows") {
  CHECK(zonal_row(Partition{1}) == mono(1, {{1, {1}}}));
  // s1^3 + s1 s2 − 2 s3 expanded by brute force: m_21 gets 3 + 1, m_111 gets 6.
  CHECK(oracle::power_product_coefficient({1, 1, 1}, {2, 1}, 3) + oracle::power_product_coefficient({2, 1}, {2, 1}, 3) == 4);
  CHECK(zonal_row(Partition{2, 1}) == mono(3, {{4, {2, 1}}, {6, {1, 1, 1}}}));
  for (int f = 1; f <= 7; ++f)
    CHECK(zonal_row(ones(f)) == SymPoly::basis_element(Basis::monomial, ones(f)) *
                                    Rational(factorial(static_cast<unsigned long>(f))));
  CHECK_THROWS_AS(zonal_row(Partition()), std::invalid_argument);
}

TEST_CASE("rows restricted to few parts") {
  CHECK(leading_coefficient({2}) == 3);
  CHECK(leading_coefficient({2, 1}) == 4);
  CHECK(leading_coefficient({3, 1}) == 6 * 3);
  for (int f = 1; f <= 10; ++f) {
    const auto full = zonal_table(f);
    for (std::size_t i = 0; i < full->kappas.size(); ++i)
      CHECK(leading_coefficient(full->kappas[i]) == full->rows[i].coeff(full->kappas[i]));
    for (int n = 1; n <= f; ++n) {
      const auto cut = zonal_table(f, n);
      CHECK(cut == zonal_table(f, n));
      std::size_t k = 0;
      for (std::size_t i = 0; i < full->kappas.size(); ++i) {
        const auto& kappa = full->kappas[i];
        SymPoly truncated(Basis::monomial, f);
        for (const auto& [l, c] : full->rows[i].terms())
          if (l.length() <= n) truncated.set(l, c);
        CHECK(zonal_row(kappa, n) == truncated);
        if (kappa.length() > n) continue;
        REQUIRE(k < cut->kappas.size());
        CHECK(cut->kappas[k] == kappa);
        CHECK(cut->rows[k] == truncated);
        ++k;
      }
      CHECK(k == cut->kappas.size());
    }
  }
}

TEST_CASE("degree-2 table") {
  const auto t = zonal_table(2);
  REQUIRE(t->kappas.size() == 2);
  CHECK(t->rows[0] == mono(2, {{3, {2}}, {2, {1, 1}}}));
  CHECK(t->rows[1] == mono(2, {{2, {1, 1}}}));
  CHECK(t == zonal_table(2));  // cached
  CHECK_THROWS(zonal_table(0));
  CHECK_THROWS_AS(t->row(Partition{3}), std::out_of_range);
}

TEST_CASE("power-sum rows") {
  auto ps = [](std::initializer_list<std::pair<long, Partition>> terms) {
    SymPoly p(Basis::powersum, terms.begin()->second.weight());
    for (const auto& [c, l] : terms) p.add_to(l, c);
    return p;
  };
  CHECK(zonal_in_powersums({3}) == ps({{1, {1, 1, 1}}, {6, {2, 1}}, {8, {3}}}));
  CHECK(zonal_in_powersums({2, 2}) ==
        ps({{1, {1, 1, 1, 1}}, {2, {2, 1, 1}}, {7, {2, 2}}, {-8, {3, 1}}, {-2, {4}}}));
  CHECK(zonal_in_powersums({1, 1, 1, 1}) ==
        ps({{1, {1, 1, 1, 1}}, {-6, {2, 1, 1}}, {3, {2, 2}}, {8, {3, 1}}, {-6, {4}}}));
}

TEST_CASE("golden rows reproduced exactly") {
  REQUIRE(golden_rows().size() == 26);
  for (const auto& g : golden_rows()) {
    CAPTURE(g.kappa.str());
    CHECK(zonal_in_powersums(g.kappa) == g.powersums);
  }
  REQUIRE(golden_chi().size() == 29);
  for (const auto& g : golden_chi()) {
    CAPTURE(g.kappa.str());
    CHECK(sym_group_degree(g.kappa.scaled(2)) == g.chi);
  }
}

TEST_CASE("value at the identity") {
  CHECK(zonal_at_identity({2}, 2) == 8);
  CHECK(zonal_at_identity({1, 1}, 1) == 0);
  for (int f = 1; f <= 4; ++f)
    for (int n = 1; n <= 5; ++n) {
      BigInt prod = 1;
      for (int k = 0; k < f; ++k) prod *= n + 2 * k;
      CHECK(zonal_at_identity({f}, n) == Rational(prod));
    }
  for (int f = 1; f <= 6; ++f)
    for (const auto& k : partitions_of(f))
      for (int n = 1; n <= 6; ++n) CHECK((zonal_at_identity(k, n) == 0) == (k.length() > n));
}

TEST_CASE("trace identity") {
  CHECK(trace_identity_ratio(1) == 1);
  CHECK(trace_identity_ratio(2) == 3);
  for (int f = 1; f <= 8; ++f) {
    const auto r = check_trace_identity(f);
    CHECK(r.holds);
    CHECK(r.discrepancy.is_zero());
  }
  ZonalTable broken = *zonal_table(3);
  broken.rows[1].add_to(Partition{2, 1}, 1);
  const auto r = check_trace_identity(broken);
  CHECK_FALSE(r.holds);
  CHECK(r.discrepancy.coeff(Partition{2, 1}) == 9);  // χ_(4,2)(1) times the injected error
}

TEST_CASE("Z_(f) top coefficients") {
  for (int f = 1; f <= 8; ++f) CHECK(z_top_check(f));
  CHECK(zonal_table(2)->row({2}).coeff({2}) == 3);
  CHECK(zonal_table(2)->row({2}).coeff({1, 1}) == 2);
  CHECK(zonal_table(1)->row({1}).coeff({1}) == 1);
  CHECK(zonal_table(5)->row({5}).coeff({5}) == 945);
}

TEST_CASE("triangular with nonnegative integer coefficients") {
  for (int f = 1; f <= 8; ++f) {
    const auto t = zonal_table(f);
    for (std::size_t i = 0; i < t->kappas.size(); ++i) {
      CHECK(t->rows[i].coeff(t->kappas[i]) != 0);
      for (const auto& [l, c] : t->rows[i].terms()) {
        CHECK(dominates(l, t->kappas[i]));
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("row sums at rational points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int f = 1; f <= 6; ++f)
    for (int n = 1; n <= 4; ++n) {
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
      for (auto& q : x) q.canonicalize();
      Rational lhs = 0, s1 = 0;
      const auto t = zonal_table(f);
      for (std::size_t i = 0; i < t->kappas.size(); ++i)
        lhs += Rational(sym_group_degree(t->kappas[i].scaled(2))) * evaluate(t->rows[i], x);
      for (const auto& q : x) s1 += q;
      Rational rhs = Rational(trace_identity_ratio(f));
      for (int k = 0; k < f; ++k) rhs *= s1;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("verify_table") {
  for (int f = 1; f <= 8; ++f)
    for (const auto& c : verify_table(*zonal_table(f))) {
      CAPTURE(c.name);
      CHECK(c.severity == Severity::pass);
    }

  ZonalTable broken = *zonal_table(4);
  broken.rows[2].add_to(Partition{3, 1}, 1);  // (2,2) row gains a term above its shape
  bool named = false, failed = false;
  for (const auto& c : verify_table(broken)) {
    if (c.severity == Severity::fail) failed = true;
    if (c.detail.find("row 2,2") != std::string::npos) named = true;
  }
  CHECK(failed);
  CHECK(named);
}

TEST_CASE("concurrent first access shares one table") {
  std::vector<std::shared_ptr<const ZonalTable>> seen(8);
  std::vector<std::shared_ptr<const std::vector<SymPoly>>> seen_ps(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < seen.size(); ++i)
      pool.emplace_back([&, i] {
        seen[i] = zonal_table(9);
        seen_ps[i] = zonal_powersum_rows(9);
      });
  }
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(seen[i] == seen[0]);
    CHECK(seen_ps[i] == seen_ps[0]);
  }
}

}  // TEST_SUITE
