#pragma once

#include <vector>

#include "zonal/partition.hpp"
#include "zonal/symfunc.hpp"

namespace zonal {

/// One row of the published table of zonal polynomials up to degree 6, in
/// power sums s_k, with the character degree χ_{2κ}(1).
struct GoldenRow {
  Partition kappa;
  SymPoly powersums;
  long chi;
};

/// Rows that were printed cleanly. Degree 5 contributes only (5), (41), (32), (31²).
const std::vector<GoldenRow>& golden_rows();
std::vector<GoldenRow> golden_rows(int f);

/// The printed χ_{2κ}(1) column for all κ with |κ| ≤ 6, including the degree-5
/// rows whose polynomials are not usable.
struct GoldenChi {
  Partition kappa;
  long chi;
};
const std::vector<GoldenChi>& golden_chi();

}  // namespace zonal
