#pragma once

// Published reference values: the five-surface tuple for q in {2,3,4,6,8} and
// the three known pairs of Wall-diffeomorphic complete-intersection threefolds
// with different c1. Tests, the verify command and --seed-tables share these.

#include <vector>

#include "sasaki_hodge/integer.hpp"

namespace sasaki {

using DegreeTuple = std::vector<long>;

struct Table1Row {
  Integer q;
  Integer p;
  Integer c1sq;
  Integer d_c1;
  bool operator==(const Table1Row&) const = default;
};

struct Table1Fixture {
  std::vector<Integer> q_list;
  Integer n;
  std::vector<Table1Row> rows;
  bool operator==(const Table1Fixture&) const = default;
};

struct Table2Row {
  DegreeTuple degrees;
  Integer d;
  Integer p1;     // m
  Integer euler;  // e
  Integer c1;     // k
  bool operator==(const Table2Row&) const = default;
};

/// Rows (0,1), (2,3), (4,5) are the diffeomorphic pairs.
struct Table2Fixture {
  std::vector<Table2Row> rows;
  bool operator==(const Table2Fixture&) const = default;
};

inline Table1Fixture reference_table1() {
  return Table1Fixture{
      {2, 3, 4, 6, 8},
      Integer("21740924188"),
      {
          {2, Integer("869636968"), Integer("39133663488"), 1},
          {3, Integer("339701941"), Integer("48917079288"), 1},
          {4, Integer("179677060"), Integer("53364086388"), 1},
          {6, Integer("75228112"), Integer("57549504600"), 5},
          {8, Integer("41098156"), Integer("59551226028"), 1},
      }};
}

inline Table2Fixture reference_table2() {
  const Integer d1 = Integer(343) * 5 * 3 * 2048;       // 7^3 * 5 * 3 * 2^11
  const Integer d_pair2 = Integer(19) * 11 * 49 * 9 * 256;  // 19 * 11 * 7^2 * 3^2 * 2^8
  const Integer d_pair3 = Integer(29) * 49 * 625 * 27 * 8;  // 29 * 7^2 * 5^4 * 3^3 * 2^3
  return Table2Fixture{{
      {{70, 16, 16, 14, 7, 6}, d1, -5683, Integer("-7767425433600"), -119},
      {{56, 49, 8, 6, 5, 4, 4}, d1, -5683, Integer("-7767425433600"), -121},
      {{88, 28, 19, 14, 6, 6}, d_pair2, -9147, Integer("-35445749391360"), -151},
      {{76, 56, 11, 7, 6, 6, 2}, d_pair2, -9147, Integer("-35445749391360"), -153},
      {{84, 29, 25, 25, 18, 7}, d_pair3, -9510, Integer("-384536710530000"), -178},
      {{60, 58, 49, 9, 5, 5, 5}, d_pair3, -9510, Integer("-384536710530000"), -180},
  }};
}

}  // namespace sasaki
