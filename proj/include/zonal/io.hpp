#pragma once

#include <string>
#include <vector>

#include "zonal/moments.hpp"
#include "zonal/symfunc.hpp"
#include "zonal/zonal.hpp"

namespace zonal {

/// A zonal table prepared for output: one coefficient row per κ in the chosen
/// basis, columns in partitions_of order, plus χ_{2κ}(1).
struct TableView {
  int degree = 0;
  Basis basis = Basis::powersum;
  std::vector<Partition> columns;
  std::vector<Partition> kappas;
  std::vector<std::vector<Rational>> coefficients;
  std::vector<BigInt> chi;
};

TableView make_table_view(const ZonalTable& table, Basis basis);

/// Monomial-basis table reconstructed from a view (converting from power sums if needed).
ZonalTable to_zonal_table(const TableView& view);

std::string table_to_json(const TableView& view);
/// Throws std::invalid_argument on schema violations.
TableView table_from_json(const std::string& text);
std::string table_to_csv(const TableView& view);
std::string table_to_latex(const TableView& view);
std::string table_to_text(const TableView& view);

/// Monomial label like "s1^2 s2" (power sums) or "m[2,1,1]".
std::string basis_label(Basis basis, const Partition& lambda);

/// Shortest-free fixed formatting with 17 significant digits.
std::string format_double(double x);

/// A flat JSON object with insertion-ordered keys; values are preformatted.
class JsonObject {
 public:
  JsonObject& add_string(const std::string& key, const std::string& value);
  JsonObject& add_raw(const std::string& key, const std::string& json_value);
  JsonObject& add_number(const std::string& key, double value);
  JsonObject& add_integer(const std::string& key, long long value);
  JsonObject& add_unsigned(const std::string& key, unsigned long long value);
  std::string dump() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Appends exact, estimate, std_error, z_score, samples, seed, resampled.
void add_report_fields(JsonObject& obj, const MomentReport& report);

}  // namespace zonal
