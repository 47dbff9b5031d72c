#include "zonal/golden.hpp"

#include <algorithm>
#include <utility>

namespace zonal {

namespace {

using Term = std::pair<long, Partition>;

GoldenRow make_row(Partition kappa, long chi, std::initializer_list<Term> terms) {
  SymPoly p(Basis::powersum, kappa.weight());
  for (const auto& [c, lambda] : terms) p.add_to(lambda, c);
  return {std::move(kappa), std::move(p), chi};
}

// Degree-6 block is printed as a grid with this column order.
const std::vector<Partition>& degree6_columns() {
  static const std::vector<Partition> cols = {
      {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 1, 1, 1}, {2, 2, 2}, {3, 2, 1},
      {4, 1, 1},          {3, 3},          {4, 2},       {5, 1},       {6}};
  return cols;
}

GoldenRow grid_row(Partition kappa, std::vector<long> coeffs, long chi) {
  SymPoly p(Basis::powersum, 6);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_to(degree6_columns()[i], coeffs[i]);
  return {std::move(kappa), std::move(p), chi};
}

std::vector<GoldenRow> build() {
  const Partition s1{1}, s11{1, 1}, s2{2}, s111{1, 1, 1}, s21{2, 1}, s3{3};
  const Partition s1111{1, 1, 1, 1}, s211{2, 1, 1}, s22{2, 2}, s31{3, 1}, s4{4};
  const Partition s1_5{1, 1, 1, 1, 1}, s2111{2, 1, 1, 1}, s221{2, 2, 1}, s311{3, 1, 1},
      s32{3, 2}, s41{4, 1}, s5{5};
  std::vector<GoldenRow> rows;
  rows.push_back(make_row({1}, 1, {{1, s1}}));

  rows.push_back(make_row({2}, 1, {{1, s11}, {2, s2}}));
  rows.push_back(make_row({1, 1}, 2, {{1, s11}, {-1, s2}}));

  rows.push_back(make_row({3}, 1, {{1, s111}, {6, s21}, {8, s3}}));
  rows.push_back(make_row({2, 1}, 9, {{1, s111}, {1, s21}, {-2, s3}}));
  rows.push_back(make_row({1, 1, 1}, 5, {{1, s111}, {-3, s21}, {2, s3}}));

  rows.push_back(make_row({4}, 1, {{1, s1111}, {12, s211}, {12, s22}, {32, s31}, {48, s4}}));
  rows.push_back(make_row({3, 1}, 20, {{1, s1111}, {5, s211}, {-2, s22}, {4, s31}, {-8, s4}}));
  rows.push_back(make_row({2, 2}, 14, {{1, s1111}, {2, s211}, {7, s22}, {-8, s31}, {-2, s4}}));
  rows.push_back(make_row({2, 1, 1}, 56, {{1, s1111}, {-1, s211}, {-2, s22}, {-2, s31}, {4, s4}}));
  rows.push_back(make_row({1, 1, 1, 1}, 14, {{1, s1111}, {-6, s211}, {3, s22}, {8, s31}, {-6, s4}}));

  rows.push_back(make_row({5}, 1,
                          {{1, s1_5}, {20, s2111}, {60, s221}, {80, s311}, {160, s32}, {240, s41},
                           {384, s5}}));
  rows.push_back(make_row({4, 1}, 35,
                          {{1, s1_5}, {11, s2111}, {6, s221}, {26, s311}, {-20, s32}, {24, s41},
                           {-48, s5}}));
  rows.push_back(make_row({3, 2}, 90,
                          {{1, s1_5}, {6, s2111}, {11, s221}, {-4, s311}, {20, s32}, {-26, s41},
                           {-8, s5}}));
  rows.push_back(make_row({3, 1, 1}, 225,
                          {{1, s1_5}, {3, s2111}, {-10, s221}, {2, s311}, {-4, s32}, {-8, s41},
                           {16, s5}}));

  rows.push_back(grid_row({6}, {1, 30, 180, 160, 120, 960, 720, 640, 1440, 2304, 3840}, 1));
  rows.push_back(grid_row({5, 1}, {1, 19, 48, 72, -12, 80, 192, -64, -144, 192, -384}, 54));
  rows.push_back(grid_row({4, 2}, {1, 12, 27, 16, 30, 24, -18, -8, 108, -144, -48}, 275));
  rows.push_back(grid_row({4, 1, 1}, {1, 9, -12, 22, -12, -60, 12, 16, -24, -48, 96}, 616));
  rows.push_back(grid_row({3, 3}, {1, 9, 33, -8, -27, 120, -78, 136, -114, -48, -24}, 132));
  rows.push_back(grid_row({3, 2, 1}, {1, 4, 3, -8, -2, 0, -18, -24, -4, 32, 16}, 2673));
  rows.push_back(grid_row({3, 1, 1, 1}, {1, 0, -21, 4, 6, 12, -6, 16, 12, 24, -48}, 1925));
  rows.push_back(grid_row({2, 2, 2}, {1, 0, 15, -20, 30, -60, 30, 40, -60, 24, 0}, 462));
  rows.push_back(grid_row({2, 2, 1, 1}, {1, -3, 3, -8, -9, 0, 24, 4, 24, -24, -12}, 2640));
  rows.push_back(grid_row({2, 1, 1, 1, 1}, {1, -8, 3, 12, 6, 20, -6, -16, -36, -24, 48}, 1485));
  rows.push_back(
      grid_row({1, 1, 1, 1, 1, 1}, {1, -15, 45, 40, -15, -120, -90, 40, 90, 144, -120}, 132));
  return rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = build();
  return rows;
}

std::vector<GoldenRow> golden_rows(int f) {
  std::vector<GoldenRow> out;
  for (const auto& r : golden_rows())
    if (r.kappa.weight() == f) out.push_back(r);
  return out;
}

const std::vector<GoldenChi>& golden_chi() {
  static const std::vector<GoldenChi> chi = [] {
    std::vector<GoldenChi> out;
    for (const auto& r : golden_rows()) out.push_back({r.kappa, r.chi});
    out.push_back({{2, 2, 1}, 252});
    out.push_back({{2, 1, 1, 1}, 300});
    out.push_back({{1, 1, 1, 1, 1}, 42});
    std::sort(out.begin(), out.end(), [](const GoldenChi& a, const GoldenChi& b) {
      if (a.kappa.weight() != b.kappa.weight()) return a.kappa.weight() < b.kappa.weight();
      return a.kappa > b.kappa;
    });
    return out;
  }();
  return chi;
}

}  // namespace zonal
