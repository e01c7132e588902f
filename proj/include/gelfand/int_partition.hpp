// Integer partitions (weakly decreasing part lists).
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gelfand {

// A partition of a non-negative integer, stored as weakly decreasing
// positive parts. The empty partition is the unique partition of 0.
struct IntPartition {
  std::vector<int> parts;

  IntPartition() = default;

  // Sorts the given parts descending; rejects non-positive entries.
  static IntPartition of(std::vector<int> parts);

  int total() const;
  int count_odd_parts() const;
  bool empty() const { return parts.empty(); }

  // "4=2+1+1" style label; "0" for the empty partition.
  std::string label() const;

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;
};

}  // namespace gelfand
