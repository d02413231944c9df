//===--- RangeSet.hpp - Alternation-of-ranges values ------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minisa {

/// Closed interval of signed 64-bit integers.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const Range &o) const { return lo == o.lo && hi == o.hi; }
};

/// The value universe an algebra operates over. Production code uses the
/// full signed 64-bit range; tests shrink it so results can be checked
/// against brute-force bit sets.
struct Universe {
  std::int64_t min = INT64_MIN;
  std::int64_t max = INT64_MAX;

  static Universe full() { return {INT64_MIN, INT64_MAX}; }
  /// Number of values, modulo 2^64 (the full universe wraps to 0, which
  /// the modular arithmetic below treats as 2^64).
  std::uint64_t size() const {
    return static_cast<std::uint64_t>(max) - static_cast<std::uint64_t>(min) +
           1;
  }
  bool contains(std::int64_t v) const { return v >= min && v <= max; }
};

/// An ordered set of disjoint, non-adjacent, nonempty closed intervals.
/// The empty set is a valid value and marks infeasibility when used as a
/// constraint.
class RangeSet {
public:
  RangeSet() = default;

  static RangeSet empty() { return RangeSet(); }
  static RangeSet of(std::int64_t lo, std::int64_t hi) {
    RangeSet rs;
    if (lo <= hi)
      rs.ranges_.push_back({lo, hi});
    return rs;
  }
  static RangeSet singleton(std::int64_t v) { return of(v, v); }
  static RangeSet fullOver(const Universe &u) { return of(u.min, u.max); }

  /// Builds a normalized set from arbitrary intervals (sorts, merges).
  static RangeSet fromRanges(std::vector<Range> ranges);

  bool isEmpty() const { return ranges_.empty(); }
  bool contains(std::int64_t v) const;
  const std::vector<Range> &ranges() const { return ranges_; }
  std::int64_t minValue() const { return ranges_.front().lo; }
  std::int64_t maxValue() const { return ranges_.back().hi; }

  bool operator==(const RangeSet &o) const { return ranges_ == o.ranges_; }
  bool operator!=(const RangeSet &o) const { return !(*this == o); }
  bool operator<(const RangeSet &o) const {
    return compare(o) < 0;
  }

  /// Text form used by sa_dump and graph dumps: "[a, b] ∪ [c, d]" with the
  /// 64-bit bounds printed as IMIN/IMAX.
  std::string str() const;

private:
  std::vector<Range> ranges_;

  int compare(const RangeSet &o) const;
  friend class RangeAlgebra;
};

/// Set algebra over a fixed universe. All operations are pure.
class RangeAlgebra {
public:
  explicit RangeAlgebra(Universe universe = Universe::full())
      : universe_(universe) {}

  const Universe &universe() const { return universe_; }

  RangeSet intersect(const RangeSet &a, const RangeSet &b) const;
  RangeSet unite(const RangeSet &a, const RangeSet &b) const;
  RangeSet complement(const RangeSet &a) const;

  /// Adds `k` to every value, wrapping around the universe; an interval
  /// that crosses the wrap point splits into two.
  RangeSet shift(const RangeSet &a, std::int64_t k) const;

  /// The set of values satisfying `x rel c`. Relations never wrap: `x > MAX`
  /// is simply empty.
  enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };
  RangeSet relationRange(Rel rel, std::int64_t c) const;

  static Rel negate(Rel rel);

private:
  Universe universe_;
};

} // namespace minisa
