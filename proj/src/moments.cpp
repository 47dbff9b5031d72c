#include "zonal/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "zonal/stats.hpp"
#include "zonal/symfunc.hpp"
#include "zonal/zonal.hpp"

namespace zonal {

std::vector<double> DiagonalSpec::as_double() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& q : eigenvalues) out.push_back(q.get_d());
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

DiagonalSpec DiagonalSpec::parse(std::string_view text) {
  DiagonalSpec d;
  for (auto tok : split(text, ',')) d.eigenvalues.push_back(parse_rational(tok));
  return d;
}

Eigen::MatrixXd RationalMatrix::to_eigen() const {
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = (*this)(r, c).get_d();
  return m;
}

RationalMatrix RationalMatrix::diagonal(const DiagonalSpec& d) {
  RationalMatrix m;
  m.n = d.n();
  m.entries.assign(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n), Rational(0));
  for (int i = 0; i < m.n; ++i)
    m.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(m.n + 1)] =
        d.eigenvalues[static_cast<std::size_t>(i)];
  return m;
}

RationalMatrix RationalMatrix::parse(std::string_view text) {
  RationalMatrix m;
  const auto rows = split(text, ';');
  m.n = static_cast<int>(rows.size());
  for (auto row : rows) {
    const auto cells = split(row, ',');
    if (static_cast<int>(cells.size()) != m.n)
      throw std::invalid_argument("matrix '" + std::string(text) + "' is not square");
    for (auto cell : cells) m.entries.push_back(parse_rational(cell));
  }
  return m;
}

void MomentReport::finalize_z() {
  const double diff = estimate - exact.get_d();
  if (std_error > 0.0)
    z_score = diff / std_error;
  else
    z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

BigInt c_n(int n, int f) {
  if (n < 1) throw std::invalid_argument("c_n: n must be positive");
  if (f < 0) throw std::invalid_argument("c_n: negative degree");
  BigInt out = 1;
  for (int k = 0; k < f; ++k) out *= n + 2 * k;
  return out;
}

namespace {

template <class T>
std::vector<T> power_sums(const std::vector<T>& x, int max_k) {
  std::vector<T> p(static_cast<std::size_t>(max_k) + 1, T(0));
  p[0] = static_cast<T>(static_cast<long>(x.size()));
  for (const T& xi : x) {
    T v(1);
    for (int k = 1; k <= max_k; ++k) {
      v *= xi;
      p[static_cast<std::size_t>(k)] += v;
    }
  }
  return p;
}

std::vector<Rational> identity_power_sums(int n, int max_k) {
  return std::vector<Rational>(static_cast<std::size_t>(max_k) + 1, Rational(n));
}

void check_pair(const DiagonalSpec& a, const DiagonalSpec& b) {
  if (a.n() < 1) throw std::invalid_argument("empty spectrum");
  if (a.n() != b.n())
    throw std::invalid_argument("spectra have different lengths (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
}

/// Σ_{κ ⊢ f, ℓ(κ) ≤ n} χ_{2κ}(1) Z_κ(x) Z_κ(y) / Z_κ(I_n).
Rational bilinear_zonal_sum(int f, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int n = static_cast<int>(x.size());
  Rational sum = 0;
  if (n < f) {
    // Few variables: only monomials with at most n parts survive.
    const auto table = zonal_table(f, n);
    const std::vector<Rational> ones(x.size(), Rational(1));
    for (std::size_t i = 0; i < table->kappas.size(); ++i) {
      const SymPoly& z = table->rows[i];
      sum += Rational(sym_group_degree(table->kappas[i].scaled(2))) * evaluate(z, x) * evaluate(z, y) /
             evaluate(z, ones);
    }
    return sum;
  }
  const auto table = zonal_table(f);
  const auto rows = zonal_powersum_rows(f);
  const auto px = power_sums(x, f), py = power_sums(y, f);
  const auto pid = identity_power_sums(n, f);
  for (std::size_t i = 0; i < table->kappas.size(); ++i) {
    const SymPoly& z = (*rows)[i];
    sum += Rational(sym_group_degree(table->kappas[i].scaled(2))) * evaluate_power_sums(z, px) *
           evaluate_power_sums(z, py) / evaluate_power_sums(z, pid);
  }
  return sum;
}

bool nonnegative(const DiagonalSpec& d) {
  return std::all_of(d.eigenvalues.begin(), d.eigenvalues.end(), [](const Rational& q) { return q >= 0; });
}

using Integrand = std::function<std::optional<double>(const OrthoMatrix&)>;

constexpr std::uint64_t kShards = 32;

/// Runs `samples` Haar draws split into fixed shards so results do not depend on
/// the thread count. Shards are merged in index order.
RunningStats run_sharded(int n, const McOptions& opt, const Integrand& integrand, std::uint64_t& rejected) {
  const std::uint64_t shards = std::max<std::uint64_t>(1, std::min(kShards, opt.samples));
  std::vector<RunningStats> stats(shards);
  std::vector<std::uint64_t> rejects(shards, 0);
  auto run_shard = [&](std::uint64_t s) {
    const std::uint64_t count = opt.samples / shards + (s < opt.samples % shards ? 1 : 0);
    Rng rng(shard_seed(opt.seed, s));
    std::uint64_t done = 0;
    while (done < count) {
      const OrthoMatrix q = sample(opt.sampler, n, rng);
      if (auto v = integrand(q)) {
        stats[s].add(*v);
        ++done;
      } else {
        ++rejects[s];
      }
    }
  };
  const int threads = std::clamp<int>(opt.threads, 1, static_cast<int>(shards));
  if (threads == 1) {
    for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t s = next++; s < shards; s = next++) run_shard(s);
      });
  }
  RunningStats total;
  for (std::uint64_t s = 0; s < shards; ++s) {
    total.merge(stats[s]);
    rejected += rejects[s];
  }
  return total;
}

MomentReport report_from(const Rational& exact, const RunningStats& st, const McOptions& opt,
                         std::uint64_t rejected) {
  MomentReport r;
  r.exact = exact;
  r.estimate = st.mean();
  r.std_error = st.std_error();
  r.samples = st.count();
  r.seed = opt.seed;
  r.resampled = rejected;
  r.finalize_z();
  return r;
}

double ipow(double x, int f) {
  double out = 1.0;
  for (int k = 0; k < f; ++k) out *= x;
  return out;
}

void check_samples(const McOptions& opt) {
  if (opt.samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
}

}  // namespace

Rational exact_trace_power_integral(const DiagonalSpec& a, const DiagonalSpec& b, int f) {
  check_pair(a, b);
  if (f < 0) throw std::invalid_argument("negative degree");
  if (f == 0) return 1;
  return bilinear_zonal_sum(f, a.eigenvalues, b.eigenvalues) / Rational(trace_identity_ratio(f));
}

Rational coefficient_extract(int f, int n, const Partition& g, const Partition& h) {
  if (g.weight() != f || h.weight() != f)
    throw std::invalid_argument("coefficient_extract: partitions must have weight f");
  if (n < 1) throw std::invalid_argument("coefficient_extract: n must be positive");
  if (f == 0) return 1;
  const auto table = zonal_table(f);
  const auto rows = zonal_powersum_rows(f);
  const auto pid = identity_power_sums(n, f);
  Rational sum = 0;
  for (std::size_t i = 0; i < table->kappas.size(); ++i) {
    const Partition& kappa = table->kappas[i];
    if (kappa.length() > n) continue;
    sum += Rational(sym_group_degree(kappa.scaled(2))) * table->rows[i].coeff(g) * table->rows[i].coeff(h) /
           evaluate_power_sums((*rows)[i], pid);
  }
  return sum / Rational(trace_identity_ratio(f));
}

ResidualReport residual_coefficients(int f, const Partition& g, const Partition& h, int n1, int n2) {
  if (f < 1 || g.weight() != f || h.weight() != f)
    throw std::invalid_argument("residual_coefficients: partitions must have weight f >= 1");
  const Partition top{f};
  if (g == top || h == top)
    throw std::invalid_argument("residual_coefficients: (f) is excluded from the residual bracket");
  ResidualReport r;
  r.n1 = n1 > 0 ? n1 : std::max(2, f);
  r.n2 = n2 > 0 ? n2 : r.n1 + 1;
  if (r.n1 == r.n2) throw std::invalid_argument("residual_coefficients: need two distinct dimensions");
  const SymPoly& ztop = zonal_table(f)->row(top);
  const Rational bb = ztop.coeff(g) * ztop.coeff(h);
  const Rational dfact(trace_identity_ratio(f));
  auto at = [&](int n) -> Rational { return dfact * Rational(c_n(n, f)) * coefficient_extract(f, n, g, h) - bb; };
  r.at_n1 = at(r.n1);
  r.at_n2 = at(r.n2);
  r.n_independent = r.at_n1 == r.at_n2;
  if (r.n_independent) r.value = r.at_n1;
  return r;
}

MomentReport mc_trace_power_integral(const DiagonalSpec& a, const DiagonalSpec& b, int f, const McOptions& opt) {
  check_pair(a, b);
  check_samples(opt);
  const Rational exact = exact_trace_power_integral(a, b, f);
  const auto ad = a.as_double(), bd = b.as_double();
  const int n = a.n();
  std::uint64_t rejected = 0;
  const auto st = run_sharded(n, opt, [&](const OrthoMatrix& q) -> std::optional<double> {
    double t = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t += ad[static_cast<std::size_t>(i)] * bd[static_cast<std::size_t>(j)] * q(i, j) * q(i, j);
    return ipow(t, f);
  }, rejected);
  return report_from(exact, st, opt, rejected);
}

MomentReport mc_zonal_splitting(const Partition& kappa, const DiagonalSpec& a, const DiagonalSpec& b,
                                const McOptions& opt) {
  check_pair(a, b);
  check_samples(opt);
  const int n = a.n();
  const int f = kappa.weight();
  if (kappa.empty()) throw std::invalid_argument("mc_zonal_splitting: empty partition");
  if (kappa.length() > n) throw std::invalid_argument("mc_zonal_splitting: κ has more parts than n");
  const bool a_nonneg = nonnegative(a);
  if (!a_nonneg && !nonnegative(b))
    throw std::invalid_argument("mc_zonal_splitting: A or B must be entrywise nonnegative");

  const SymPoly z = zonal_in_powersums(kappa);
  const Rational exact = evaluate_power_sums(z, power_sums(a.eigenvalues, f)) *
                         evaluate_power_sums(z, power_sums(b.eigenvalues, f)) /
                         evaluate_power_sums(z, identity_power_sums(n, f));

  // Conjugate the nonnegative side's square root around the other: same spectrum as A H B Hᵀ.
  const auto outer = (a_nonneg ? a : b).as_double();
  const auto inner = (a_nonneg ? b : a).as_double();
  Eigen::VectorXd root(n), mid(n);
  for (int i = 0; i < n; ++i) {
    root(i) = std::sqrt(outer[static_cast<std::size_t>(i)]);
    mid(i) = inner[static_cast<std::size_t>(i)];
  }
  std::uint64_t rejected = 0;
  const auto st = run_sharded(n, opt, [&](const OrthoMatrix& q) -> std::optional<double> {
    const Eigen::MatrixXd h = a_nonneg ? q : Eigen::MatrixXd(q.transpose());
    const Eigen::MatrixXd s = root.asDiagonal() * h * mid.asDiagonal() * h.transpose() * root.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (s + s.transpose()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return std::nullopt;
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return evaluate_power_sums(z, power_sums(eig, f));
  }, rejected);
  return report_from(exact, st, opt, rejected);
}

Rational exact_trace_ah_integral(const RationalMatrix& a, int f) {
  if (a.n < 1) throw std::invalid_argument("empty matrix");
  if (f < 0) throw std::invalid_argument("negative degree");
  if (f % 2) return 0;
  if (f == 0) return 1;
  const int half = f / 2;
  const int n = a.n;
  const auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c); };
  std::vector<Rational> gram(static_cast<std::size_t>(n * n), Rational(0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) gram[idx(r, c)] += a(r, k) * a(c, k);
  // p_k(AAᵀ) = tr((AAᵀ)^k)
  std::vector<Rational> p(static_cast<std::size_t>(half) + 1, Rational(n));
  std::vector<Rational> power = gram;
  for (int k = 1; k <= half; ++k) {
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += power[idx(i, i)];
    p[static_cast<std::size_t>(k)] = tr;
    if (k == half) break;
    std::vector<Rational> next(power.size(), Rational(0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int m = 0; m < n; ++m) next[idx(r, c)] += power[idx(r, m)] * gram[idx(m, c)];
    power = std::move(next);
  }
  const auto table = zonal_table(half);
  const auto rows = zonal_powersum_rows(half);
  const auto pid = identity_power_sums(n, half);
  Rational sum = 0;
  for (std::size_t i = 0; i < table->kappas.size(); ++i) {
    if (table->kappas[i].length() > n) continue;
    const SymPoly& z = (*rows)[i];
    sum += Rational(sym_group_degree(table->kappas[i].scaled(2))) * evaluate_power_sums(z, p) /
           evaluate_power_sums(z, pid);
  }
  return sum;
}

MomentReport mc_trace_ah(const RationalMatrix& a, int f, const McOptions& opt) {
  const Rational exact = exact_trace_ah_integral(a, f);
  if (f % 2) {
    MomentReport r;
    r.exact = exact;
    r.seed = opt.seed;
    r.finalize_z();
    return r;
  }
  check_samples(opt);
  const Eigen::MatrixXd ad = a.to_eigen();
  std::uint64_t rejected = 0;
  const auto st = run_sharded(a.n, opt, [&](const OrthoMatrix& q) -> std::optional<double> {
    return ipow((ad * q).trace(), f);
  }, rejected);
  return report_from(exact, st, opt, rejected);
}

SeriesResult hyper0f0(const DiagonalSpec& a, const DiagonalSpec& b, int max_degree) {
  check_pair(a, b);
  if (max_degree < 0) throw std::invalid_argument("hyper0f0: negative truncation degree");
  SeriesResult out;
  Rational scale = 1;  // 1 / (2^f f!)
  for (int f = 0; f <= max_degree; ++f) {
    if (f > 0) scale /= 2 * f;
    out.terms.push_back(exact_trace_power_integral(a, b, f) * scale);
    out.partial_sum += out.terms.back();
  }
  out.value = out.partial_sum.get_d();
  if (nonnegative(a) && nonnegative(b)) {
    // tr D_A Q D_B Qᵀ ≤ T, the sorted pairing of the spectra, so the tail is
    // bounded by the tail of exp(T/2).
    auto ad = a.as_double(), bd = b.as_double();
    std::sort(ad.rbegin(), ad.rend());
    std::sort(bd.rbegin(), bd.rend());
    double t = 0.0;
    for (std::size_t i = 0; i < ad.size(); ++i) t += ad[i] * bd[i];
    const double half = 0.5 * t;
    double term = 1.0;
    for (int f = 1; f <= max_degree; ++f) term *= half / f;
    double tail = 0.0;
    for (int f = max_degree + 1; f < max_degree + 1000; ++f) {
      term *= half / f;
      tail += term;
      if (term < 1e-300 || (tail > 0 && term < tail * 1e-17)) break;
    }
    out.tail_bound = tail;
  }
  return out;
}

MomentReport mc_exp_series(const DiagonalSpec& a, const DiagonalSpec& b, int max_degree, const McOptions& opt) {
  check_pair(a, b);
  check_samples(opt);
  const SeriesResult series = hyper0f0(a, b, max_degree);
  const auto ad = a.as_double(), bd = b.as_double();
  const int n = a.n();
  std::uint64_t rejected = 0;
  const auto st = run_sharded(n, opt, [&](const OrthoMatrix& q) -> std::optional<double> {
    double t = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t += ad[static_cast<std::size_t>(i)] * bd[static_cast<std::size_t>(j)] * q(i, j) * q(i, j);
    return std::exp(0.5 * t);
  }, rejected);
  return report_from(series.partial_sum, st, opt, rejected);
}

}  // namespace zonal
