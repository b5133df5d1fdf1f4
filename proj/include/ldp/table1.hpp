#pragma once

#include "ldp/graphs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ldp {

/// One row of the catalogue of types (†) appearing in 2[2^4] + (†).
struct Table1Family {
  int id = 0;  // 1..21 in row order
  std::string pattern;
  bool uses_n = false;
  bool uses_m = false;
  bool uses_l = false;
  int l_min = 0;
  int l_max = 0;
};

struct Table1Params {
  int n = 0;  // n >= 0
  int m = 1;  // m >= 1
  int l = 1;  // family-specific range
};

struct Table1Instance {
  int family = 0;
  Table1Params params;
};

const std::vector<Table1Family>& table1_families();
const Table1Family& table1_family(int id);

/// The (†) part as notation, with parameters substituted. Throws ParamOutOfRange.
std::string table1_dagger(const Table1Instance& inst);

/// 2[2^4] + (†). Throws ParamOutOfRange.
DynkinType table1_generate(const Table1Instance& inst);

/// Every instance with n in [n_lo, n_hi], m in [m_lo, m_hi] and every legal l
/// (optionally clipped to l_hi). Parameters a family does not use are fixed at
/// their minimum, so each family contributes each distinct type once.
std::vector<Table1Instance> table1_enumerate(int n_lo, int n_hi, int m_lo, int m_hi,
                                             std::optional<int> l_hi = std::nullopt);

}  // namespace ldp
