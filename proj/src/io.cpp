#include "zonal/io.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zonal {

TableView make_table_view(const ZonalTable& table, Basis basis) {
  TableView v;
  v.degree = table.degree;
  v.basis = basis;
  v.columns = partitions_of(table.degree);
  v.kappas = table.kappas;
  for (std::size_t i = 0; i < table.kappas.size(); ++i) {
    const SymPoly row = basis == Basis::monomial ? table.rows[i] : m_to_p(table.rows[i]);
    std::vector<Rational> coeffs;
    for (const auto& col : v.columns) coeffs.push_back(row.coeff(col));
    v.coefficients.push_back(std::move(coeffs));
    v.chi.push_back(sym_group_degree(table.kappas[i].scaled(2)));
  }
  return v;
}

ZonalTable to_zonal_table(const TableView& view) {
  ZonalTable t;
  t.degree = view.degree;
  t.kappas = view.kappas;
  for (const auto& coeffs : view.coefficients) {
    SymPoly p(view.basis, view.degree);
    for (std::size_t c = 0; c < view.columns.size(); ++c) p.set(view.columns[c], coeffs[c]);
    t.rows.push_back(view.basis == Basis::monomial ? p : p_to_m(p));
  }
  return t;
}

std::string table_to_json(const TableView& v) {
  nlohmann::ordered_json j;
  j["degree"] = v.degree;
  j["basis"] = to_string(v.basis);
  auto cols = nlohmann::ordered_json::array();
  for (const auto& c : v.columns) cols.push_back(c.str());
  j["columns"] = cols;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < v.kappas.size(); ++i) {
    nlohmann::ordered_json r;
    r["kappa"] = v.kappas[i].str();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& q : v.coefficients[i]) coeffs.push_back(to_string(q));
    r["coefficients"] = coeffs;
    r["chi"] = v.chi[i].get_str();
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

TableView table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("table JSON: ") + e.what());
  }
  try {
    TableView v;
    v.degree = j.at("degree").get<int>();
    v.basis = parse_basis(j.at("basis").get<std::string>());
    for (const auto& c : j.at("columns")) {
      v.columns.push_back(Partition::parse(c.get<std::string>()));
      if (v.columns.back().weight() != v.degree)
        throw std::invalid_argument("table JSON: column weight does not match degree");
    }
    for (const auto& r : j.at("rows")) {
      v.kappas.push_back(Partition::parse(r.at("kappa").get<std::string>()));
      if (v.kappas.back().weight() != v.degree)
        throw std::invalid_argument("table JSON: row weight does not match degree");
      std::vector<Rational> coeffs;
      for (const auto& q : r.at("coefficients")) coeffs.push_back(parse_rational(q.get<std::string>()));
      if (coeffs.size() != v.columns.size())
        throw std::invalid_argument("table JSON: row " + v.kappas.back().str() + " has the wrong width");
      v.coefficients.push_back(std::move(coeffs));
      v.chi.emplace_back(r.at("chi").get<std::string>());
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table JSON: ") + e.what());
  }
}

std::string basis_label(Basis basis, const Partition& lambda) {
  if (basis == Basis::monomial) return "m[" + lambda.str() + "]";
  // s_k factors in increasing k with exponents, e.g. (2,1,1) -> "s1^2 s2".
  std::string out;
  const auto mult = multiplicities(lambda);
  for (std::size_t k = 1; k < mult.size(); ++k) {
    if (!mult[k]) continue;
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(k);
    if (mult[k] > 1) out += "^" + std::to_string(mult[k]);
  }
  return out.empty() ? "1" : out;
}

std::string table_to_csv(const TableView& v) {
  std::ostringstream os;
  os << "kappa";
  for (const auto& c : v.columns) os << ',' << basis_label(v.basis, c);
  os << ",chi\n";
  for (std::size_t i = 0; i < v.kappas.size(); ++i) {
    os << '"' << v.kappas[i].str() << '"';
    for (const auto& q : v.coefficients[i]) os << ',' << to_string(q);
    os << ',' << v.chi[i].get_str() << '\n';
  }
  return os.str();
}

namespace {

std::string latex_partition(const Partition& p) {
  // Exponent notation: (2,1,1) -> (21^{2}).
  std::string out = "(";
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += std::to_string(parts[i]);
    if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return out + ")";
}

std::string latex_label(Basis basis, const Partition& lambda) {
  if (basis == Basis::monomial) return "m_{" + latex_partition(lambda) + "}";
  std::string out;
  const auto mult = multiplicities(lambda);
  for (std::size_t k = 1; k < mult.size(); ++k) {
    if (!mult[k]) continue;
    if (!out.empty()) out += ' ';
    out += "s_" + std::to_string(k);
    if (mult[k] > 1) out += "^" + std::to_string(mult[k]);
  }
  return out;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  return std::string(q < 0 ? "-" : "") + "\\frac{" + BigInt(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string table_to_latex(const TableView& v) {
  std::ostringstream os;
  os << "\\begin{tabular}{|c|" << std::string(v.columns.size(), 'r') << "|r|}\n\\hline\n";
  os << v.degree;
  for (const auto& c : v.columns) os << " & $" << latex_label(v.basis, c) << "$";
  os << " & $\\chi_{[2\\kappa]}(1)$ \\\\\n\\hline\n";
  for (std::size_t i = 0; i < v.kappas.size(); ++i) {
    os << "$" << latex_partition(v.kappas[i]) << "$";
    for (const auto& q : v.coefficients[i]) os << " & " << latex_rational(q);
    os << " & " << v.chi[i].get_str() << " \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

std::string table_to_text(const TableView& v) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& k : v.kappas) width = std::max(width, k.str().size() + 2);
  os << std::left << std::setw(static_cast<int>(width)) << "kappa" << "  chi  polynomial\n";
  for (std::size_t i = 0; i < v.kappas.size(); ++i) {
    std::string poly;
    // s1^f first, as tables are usually printed.
    for (std::size_t c = v.columns.size(); c-- > 0;) {
      const Rational& q = v.coefficients[i][c];
      if (q == 0) continue;
      const bool neg = q < 0;
      const Rational mag = neg ? Rational(-q) : q;
      if (poly.empty())
        poly += neg ? "-" : "";
      else
        poly += neg ? " - " : " + ";
      if (mag != 1) poly += mag.get_str() + " ";
      poly += basis_label(v.basis, v.columns[c]);
    }
    os << std::left << std::setw(static_cast<int>(width)) << ("(" + v.kappas[i].str() + ")") << "  "
       << std::setw(4) << v.chi[i].get_str() << " " << (poly.empty() ? "0" : poly) << '\n';
  }
  return os.str();
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

JsonObject& JsonObject::add_string(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, nlohmann::json(value).dump());
  return *this;
}

JsonObject& JsonObject::add_raw(const std::string& key, const std::string& json_value) {
  fields_.emplace_back(key, json_value);
  return *this;
}

JsonObject& JsonObject::add_number(const std::string& key, double value) {
  fields_.emplace_back(key, format_double(value));
  return *this;
}

JsonObject& JsonObject::add_integer(const std::string& key, long long value) {
  fields_.emplace_back(key, std::to_string(value));
  return *this;
}

JsonObject& JsonObject::add_unsigned(const std::string& key, unsigned long long value) {
  fields_.emplace_back(key, std::to_string(value));
  return *this;
}

std::string JsonObject::dump() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += "  " + nlohmann::json(fields_[i].first).dump() + ": " + fields_[i].second;
    out += i + 1 < fields_.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

void add_report_fields(JsonObject& obj, const MomentReport& r) {
  obj.add_string("exact", to_string(r.exact))
      .add_number("exact_approx", r.exact.get_d())
      .add_number("estimate", r.estimate)
      .add_number("std_error", r.std_error)
      .add_number("z_score", r.z_score)
      .add_unsigned("samples", r.samples)
      .add_unsigned("seed", r.seed)
      .add_unsigned("resampled", r.resampled);
}

}  // namespace zonal
