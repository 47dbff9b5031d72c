#include "zonal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zonal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    out = Rational(BigInt(digits), den);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial(long n) {
  if (n <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace zonal
