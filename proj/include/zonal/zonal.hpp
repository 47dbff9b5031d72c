#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zonal/partition.hpp"
#include "zonal/symfunc.hpp"

namespace zonal {

/// All zonal polynomials of one degree in the monomial basis, normalized so the
/// coefficient of m_{1^f} is f!. Rows follow partitions_of(degree).
struct ZonalTable {
  int degree = 0;
  std::vector<Partition> kappas;
  std::vector<SymPoly> rows;

  /// Throws std::out_of_range if κ is not a row of this table.
  const SymPoly& row(const Partition& kappa) const;
};

/// Z_κ in the monomial basis via the dominance recursion, seeded with b_{κ,κ} = 1
/// and rescaled to b_{κ,1^f} = f!.
SymPoly zonal_row(const Partition& kappa);

/// Z_κ restricted to monomials with at most `max_length` parts, which is all of
/// Z_κ as a polynomial in max_length variables. The recursion never lengthens a
/// partition, so the restriction is exact; the row is scaled so that b_{κ,κ} is the
/// hook product Π (2·arm + leg + 1), which agrees with b_{κ,1^f} = f!.
SymPoly zonal_row(const Partition& kappa, int max_length);

/// Π over the cells of κ of (2·arm + leg + 1): the m_κ coefficient of Z_κ.
BigInt leading_coefficient(const Partition& kappa);

/// Rows of degree f with ℓ(κ) ≤ n, each restricted to at most n parts. Cached.
std::shared_ptr<const ZonalTable> zonal_table(int f, int n);

/// Builds every row of degree f. Tables are cached per degree and immutable.
std::shared_ptr<const ZonalTable> zonal_table(int f);

/// Z_κ in the power-sum basis. Throws std::runtime_error on a non-integer coefficient.
SymPoly zonal_in_powersums(const Partition& kappa);

/// All rows of degree f in the power-sum basis, in partitions_of order. Cached.
std::shared_ptr<const std::vector<SymPoly>> zonal_powersum_rows(int f);

/// Z_κ(I_n); zero iff κ has more than n parts.
Rational zonal_at_identity(const Partition& kappa, int n);

/// Outcome of Σ_κ χ_{2κ}(1) Z_κ = ((2f)!/(2^f f!)) p_1^f. `discrepancy` is
/// lhs − rhs in the monomial basis; it is zero on success.
struct TraceIdentityReport {
  bool holds = false;
  SymPoly discrepancy{Basis::monomial, 0};
};

TraceIdentityReport check_trace_identity(int f);
TraceIdentityReport check_trace_identity(const ZonalTable& table);

/// m_f coefficient of Z_(f) is (2f−1)!! and its m_{1^f} coefficient is f!.
bool z_top_check(int f);
bool z_top_check(const ZonalTable& table);

/// (2f)! / (2^f f!) = (2f−1)!!.
BigInt trace_identity_ratio(int f);

enum class Severity { pass, warning, fail };

struct CheckResult {
  std::string name;
  Severity severity = Severity::pass;
  std::string detail;
};

/// Golden-table equality (where golden rows exist), trace identity, Z_(f)
/// structure, normalization, triangularity and integrality of one table.
/// Only integrality is demoted to a warning.
std::vector<CheckResult> verify_table(const ZonalTable& table);

}  // namespace zonal
