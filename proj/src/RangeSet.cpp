//===--- RangeSet.cpp - Alternation-of-ranges values ------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/RangeSet.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace minisa {

namespace {

std::string boundStr(std::int64_t v) {
  if (v == INT64_MIN)
    return "IMIN";
  if (v == INT64_MAX)
    return "IMAX";
  return std::to_string(v);
}

// a.hi and b.lo touch or overlap, i.e. the two ranges can be merged.
bool joinable(const Range &a, const Range &b) {
  if (a.hi >= b.lo)
    return true;
  return a.hi != INT64_MAX && a.hi + 1 == b.lo;
}

} // namespace

RangeSet RangeSet::fromRanges(std::vector<Range> ranges) {
  std::erase_if(ranges, [](const Range &r) { return r.lo > r.hi; });
  std::sort(ranges.begin(), ranges.end(), [](const Range &a, const Range &b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  RangeSet out;
  for (const Range &r : ranges) {
    if (!out.ranges_.empty() && joinable(out.ranges_.back(), r))
      out.ranges_.back().hi = std::max(out.ranges_.back().hi, r.hi);
    else
      out.ranges_.push_back(r);
  }
  return out;
}

bool RangeSet::contains(std::int64_t v) const {
  for (const Range &r : ranges_) {
    if (v < r.lo)
      return false;
    if (v <= r.hi)
      return true;
  }
  return false;
}

int RangeSet::compare(const RangeSet &o) const {
  std::size_t n = std::min(ranges_.size(), o.ranges_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ranges_[i].lo != o.ranges_[i].lo)
      return ranges_[i].lo < o.ranges_[i].lo ? -1 : 1;
    if (ranges_[i].hi != o.ranges_[i].hi)
      return ranges_[i].hi < o.ranges_[i].hi ? -1 : 1;
  }
  if (ranges_.size() != o.ranges_.size())
    return ranges_.size() < o.ranges_.size() ? -1 : 1;
  return 0;
}

std::string RangeSet::str() const {
  if (ranges_.empty())
    return "<empty>";
  std::ostringstream out;
  for (std::size_t i = 0; i < ranges_.size(); ++i) {
    if (i > 0)
      out << " ∪ "; // set-union sign
    out << "[" << boundStr(ranges_[i].lo) << ", " << boundStr(ranges_[i].hi)
        << "]";
  }
  return out.str();
}

RangeSet RangeAlgebra::intersect(const RangeSet &a, const RangeSet &b) const {
  std::vector<Range> out;
  std::size_t i = 0, j = 0;
  const auto &ra = a.ranges();
  const auto &rb = b.ranges();
  while (i < ra.size() && j < rb.size()) {
    std::int64_t lo = std::max(ra[i].lo, rb[j].lo);
    std::int64_t hi = std::min(ra[i].hi, rb[j].hi);
    if (lo <= hi)
      out.push_back({lo, hi});
    if (ra[i].hi < rb[j].hi)
      ++i;
    else
      ++j;
  }
  return RangeSet::fromRanges(std::move(out));
}

RangeSet RangeAlgebra::unite(const RangeSet &a, const RangeSet &b) const {
  std::vector<Range> all = a.ranges();
  all.insert(all.end(), b.ranges().begin(), b.ranges().end());
  return RangeSet::fromRanges(std::move(all));
}

RangeSet RangeAlgebra::complement(const RangeSet &a) const {
  std::vector<Range> out;
  std::int64_t next = universe_.min;
  bool exhausted = false;
  for (const Range &r : a.ranges()) {
    if (r.lo > next)
      out.push_back({next, r.lo - 1});
    if (r.hi == universe_.max) {
      exhausted = true;
      break;
    }
    next = r.hi + 1;
  }
  if (!exhausted)
    out.push_back({next, universe_.max});
  if (a.isEmpty())
    return RangeSet::fullOver(universe_);
  return RangeSet::fromRanges(std::move(out));
}

RangeSet RangeAlgebra::shift(const RangeSet &a, std::int64_t k) const {
  const std::uint64_t size = universe_.size(); // 0 means 2^64
  const std::uint64_t base = static_cast<std::uint64_t>(universe_.min);

  auto toOffset = [&](std::int64_t v) {
    std::uint64_t off = static_cast<std::uint64_t>(v) - base;
    return size == 0 ? off : off % size;
  };
  auto fromOffset = [&](std::uint64_t off) {
    return static_cast<std::int64_t>(base + off);
  };
  std::uint64_t delta = static_cast<std::uint64_t>(k);
  if (size != 0)
    delta = ((delta % size) + size) % size;

  std::vector<Range> out;
  for (const Range &r : a.ranges()) {
    std::uint64_t width =
        static_cast<std::uint64_t>(r.hi) - static_cast<std::uint64_t>(r.lo);
    std::uint64_t lo = toOffset(r.lo) + delta;
    if (size != 0)
      lo %= size;
    std::uint64_t hi = lo + width;
    bool wraps = size == 0 ? hi < lo : hi >= size;
    if (!wraps) {
      out.push_back({fromOffset(lo), fromOffset(hi)});
    } else {
      std::uint64_t hiWrapped = size == 0 ? hi : hi - size;
      out.push_back({universe_.min, fromOffset(hiWrapped)});
      out.push_back({fromOffset(lo), universe_.max});
    }
  }
  return RangeSet::fromRanges(std::move(out));
}

RangeSet RangeAlgebra::relationRange(Rel rel, std::int64_t c) const {
  switch (rel) {
  case Rel::Eq:
    return universe_.contains(c) ? RangeSet::singleton(c) : RangeSet::empty();
  case Rel::Ne:
    return complement(relationRange(Rel::Eq, c));
  case Rel::Lt:
    if (c <= universe_.min)
      return RangeSet::empty();
    return RangeSet::of(universe_.min, std::min(c - 1, universe_.max));
  case Rel::Le:
    if (c < universe_.min)
      return RangeSet::empty();
    return RangeSet::of(universe_.min, std::min(c, universe_.max));
  case Rel::Gt:
    if (c >= universe_.max)
      return RangeSet::empty();
    return RangeSet::of(std::max(c + 1, universe_.min), universe_.max);
  case Rel::Ge:
    if (c > universe_.max)
      return RangeSet::empty();
    return RangeSet::of(std::max(c, universe_.min), universe_.max);
  }
  return RangeSet::empty();
}

RangeAlgebra::Rel RangeAlgebra::negate(Rel rel) {
  switch (rel) {
  case Rel::Eq:
    return Rel::Ne;
  case Rel::Ne:
    return Rel::Eq;
  case Rel::Lt:
    return Rel::Ge;
  case Rel::Le:
    return Rel::Gt;
  case Rel::Gt:
    return Rel::Le;
  case Rel::Ge:
    return Rel::Lt;
  }
  return Rel::Eq;
}

} // namespace minisa
