#include "zonal/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace zonal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n)
    throw std::invalid_argument("partition " + str() + " has more than " + std::to_string(n) +
                                " parts");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

Partition Partition::scaled(int k) const {
  std::vector<int> out(parts_);
  for (int& p : out) p *= k;
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trimmed(text).empty()) return Partition();
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = trimmed(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (token.empty()) throw std::invalid_argument("empty part in '" + std::string(text) + "'");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    enumerate(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int f) {
  if (f < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(f, f, prefix, out);
  return out;
}

bool dominates(const Partition& g, const Partition& f) {
  if (g.weight() != f.weight())
    throw std::invalid_argument("dominates: weight mismatch (" + g.str() + " vs " + f.str() + ")");
  int sg = 0, sf = 0;
  const auto len = static_cast<std::size_t>(std::max(g.length(), f.length()));
  for (std::size_t k = 0; k < len; ++k) {
    sg += g[k];
    sf += f[k];
    if (sg > sf) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

long sum_of_squares(const Partition& lambda) {
  long a = 0;
  for (int p : lambda.parts()) a += static_cast<long>(p) * p;
  return a;
}

long weighted_index_sum(const Partition& lambda) {
  long b = 0;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i)
    b += static_cast<long>(i + 1) * lambda.parts()[i];
  return b;
}

long rho(const Partition& lambda) { return sum_of_squares(lambda) - weighted_index_sum(lambda); }

long lb_eigenvalue(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("lb_eigenvalue: partition has more than n parts");
  long total = 0;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    const long k = lambda.parts()[i];
    total += k * (k + n - static_cast<long>(i + 1) - 1);
  }
  return total;
}

BigInt gl_dimension(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) throw std::invalid_argument("gl_dimension: negative weight");
    if (i > 0 && w[i] > w[i - 1]) throw std::invalid_argument("gl_dimension: weight not monotone");
  }
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      num *= static_cast<long>(w[i] - w[j]) + static_cast<long>(j - i);
      den *= static_cast<long>(j - i);
    }
  return num / den;
}

BigInt gl_dimension(const Partition& lambda, int n) { return gl_dimension(lambda.padded(n)); }

BigInt sym_group_degree(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda.parts()[static_cast<std::size_t>(i)] - j - 1;
      const int leg = cols.parts()[static_cast<std::size_t>(j)] - i - 1;
      hooks *= static_cast<unsigned long>(arm + leg + 1);
    }
  return factorial(static_cast<unsigned long>(lambda.weight())) / hooks;
}

std::vector<int> multiplicities(const Partition& lambda) {
  std::vector<int> m(static_cast<std::size_t>(lambda.empty() ? 1 : lambda[0] + 1), 0);
  for (int p : lambda.parts()) ++m[static_cast<std::size_t>(p)];
  return m;
}

}  // namespace zonal
