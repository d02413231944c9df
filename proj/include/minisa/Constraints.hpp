//===--- Constraints.hpp - Symbols and the constraint manager ---*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/RangeSet.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minisa {

/// Identifier of one conjured unknown value. Never reused within a
/// top-level analysis.
using SymbolId = int;

/// The symbolic expressions tracked precisely: a bare symbol, or a symbol
/// plus a nonzero constant. Anything deeper collapses to Unknown during
/// evaluation.
struct SymExpr {
  SymbolId sym = 0;
  std::int64_t offset = 0; // 0 = plain atom

  bool isAtom() const { return offset == 0; }
  bool operator==(const SymExpr &o) const {
    return sym == o.sym && offset == o.offset;
  }
  bool operator<(const SymExpr &o) const {
    return sym < o.sym || (sym == o.sym && offset < o.offset);
  }
};

/// Allocates symbols and remembers how to print them: symbols standing for
/// parameter values print as "$<name>", conjured ones as "$c<id>".
class SymbolRegistry {
public:
  SymbolId conjure(std::string hint, bool named = false) {
    names_.push_back(named ? "$" + hint : "$c" + std::to_string(nextId()));
    return static_cast<SymbolId>(names_.size()) - 1;
  }

  const std::string &name(SymbolId id) const { return names_[id]; }
  int count() const { return static_cast<int>(names_.size()); }

  std::string render(const SymExpr &e) const;

private:
  std::vector<std::string> names_;
  int nextId() const { return static_cast<int>(names_.size()); }
};

/// Per-symbol range constraints collected along one execution path. An
/// absent symbol is unconstrained (full range); no entry is ever empty —
/// emptiness makes the whole state infeasible instead.
using ConstraintMap = std::map<SymbolId, RangeSet>;

enum class Zeroness { NeverZero, OnlyZero, MaybeZero };

/// Refines `cm` with the assumption `e rel c` (or its negation when
/// `holds` is false). Returns the refined map, or nothing when the result
/// is infeasible. Offsets are normalized onto the underlying atom with
/// wraparound-aware shifting, so the true/false results always partition
/// the atom's previous range exactly.
std::optional<ConstraintMap> assume(const ConstraintMap &cm, const SymExpr &e,
                                    RangeAlgebra::Rel rel, std::int64_t c,
                                    bool holds,
                                    const RangeAlgebra &algebra = RangeAlgebra());

/// The range of possible values of `e` under `cm` (offset applied).
RangeSet effectiveRange(const ConstraintMap &cm, const SymExpr &e,
                        const RangeAlgebra &algebra = RangeAlgebra());

Zeroness queryZeroness(std::int64_t concrete);
Zeroness queryZeroness(const ConstraintMap &cm, const SymExpr &e,
                       const RangeAlgebra &algebra = RangeAlgebra());

/// Two's-complement evaluation of a concrete MiniC binary operation.
/// Comparisons yield 0/1, division truncates toward zero, and `/` or `%`
/// by zero yields nothing (the DivByZero signal consumed by checkers).
/// Logical operators are excluded: the CFG lowers them to branches.
enum class ArithOp { Add, Sub, Mul, Div, Rem, Lt, Le, Gt, Ge, Eq, Ne };
std::optional<std::int64_t> evalConcreteBinOp(std::int64_t lhs, ArithOp op,
                                              std::int64_t rhs);

} // namespace minisa
