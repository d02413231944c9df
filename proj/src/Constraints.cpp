//===--- Constraints.cpp - Symbols and the constraint manager ---*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Constraints.hpp"

namespace minisa {

std::string SymbolRegistry::render(const SymExpr &e) const {
  std::string out = name(e.sym);
  if (e.offset > 0) {
    out += "+" + std::to_string(e.offset);
  } else if (e.offset < 0) {
    // Print the magnitude through uint64 so INT64_MIN works too.
    std::uint64_t magnitude = ~static_cast<std::uint64_t>(e.offset) + 1;
    out += "-" + std::to_string(magnitude);
  }
  return out;
}

std::optional<ConstraintMap> assume(const ConstraintMap &cm, const SymExpr &e,
                                    RangeAlgebra::Rel rel, std::int64_t c,
                                    bool holds, const RangeAlgebra &algebra) {
  if (!holds)
    rel = RangeAlgebra::negate(rel);

  // (sym + offset) rel c  <=>  sym in shift({x | x rel c}, -offset).
  RangeSet satisfying = algebra.relationRange(rel, c);
  if (e.offset != 0)
    satisfying = algebra.shift(satisfying, -e.offset);

  auto it = cm.find(e.sym);
  RangeSet current = it == cm.end() ? RangeSet::fullOver(algebra.universe())
                                    : it->second;
  RangeSet refined = algebra.intersect(current, satisfying);
  if (refined.isEmpty())
    return std::nullopt;

  ConstraintMap out = cm;
  if (refined == RangeSet::fullOver(algebra.universe()))
    out.erase(e.sym); // unconstrained entries stay implicit
  else
    out[e.sym] = std::move(refined);
  return out;
}

RangeSet effectiveRange(const ConstraintMap &cm, const SymExpr &e,
                        const RangeAlgebra &algebra) {
  auto it = cm.find(e.sym);
  RangeSet base = it == cm.end() ? RangeSet::fullOver(algebra.universe())
                                 : it->second;
  return e.offset == 0 ? base : algebra.shift(base, e.offset);
}

Zeroness queryZeroness(std::int64_t concrete) {
  return concrete == 0 ? Zeroness::OnlyZero : Zeroness::NeverZero;
}

Zeroness queryZeroness(const ConstraintMap &cm, const SymExpr &e,
                       const RangeAlgebra &algebra) {
  RangeSet range = effectiveRange(cm, e, algebra);
  if (range == RangeSet::singleton(0))
    return Zeroness::OnlyZero;
  if (!range.contains(0))
    return Zeroness::NeverZero;
  return Zeroness::MaybeZero;
}

std::optional<std::int64_t> evalConcreteBinOp(std::int64_t lhs, ArithOp op,
                                              std::int64_t rhs) {
  auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
  auto s = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  switch (op) {
  case ArithOp::Add:
    return s(u(lhs) + u(rhs));
  case ArithOp::Sub:
    return s(u(lhs) - u(rhs));
  case ArithOp::Mul:
    return s(u(lhs) * u(rhs));
  case ArithOp::Div:
    if (rhs == 0)
      return std::nullopt;
    if (lhs == INT64_MIN && rhs == -1)
      return INT64_MIN; // wraps, like the other operators
    return lhs / rhs;
  case ArithOp::Rem:
    if (rhs == 0)
      return std::nullopt;
    if (lhs == INT64_MIN && rhs == -1)
      return 0;
    return lhs % rhs;
  case ArithOp::Lt:
    return lhs < rhs ? 1 : 0;
  case ArithOp::Le:
    return lhs <= rhs ? 1 : 0;
  case ArithOp::Gt:
    return lhs > rhs ? 1 : 0;
  case ArithOp::Ge:
    return lhs >= rhs ? 1 : 0;
  case ArithOp::Eq:
    return lhs == rhs ? 1 : 0;
  case ArithOp::Ne:
    return lhs != rhs ? 1 : 0;
  }
  return std::nullopt;
}

} // namespace minisa
