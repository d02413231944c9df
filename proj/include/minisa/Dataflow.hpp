//===--- Dataflow.hpp - Worklist fixpoint solver and flow checks *- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Cfg.hpp"
#include "minisa/Report.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace minisa {

/// How facts merge where branches fold together: May unions (fact holds on
/// some branch), Must intersects (fact holds on every branch).
enum class MergeMode { May, Must };

/// A set over the function's local variables, by index into Cfg::locals.
using FlowFact = std::set<int>;

/// Maps declarations to dense indices for one function.
class VarUniverse {
public:
  explicit VarUniverse(const Cfg &cfg);

  int size() const { return static_cast<int>(vars_.size()); }
  const AstNode *var(int index) const { return vars_[index]; }
  int indexOf(const AstNode *decl) const; // -1 if not a local
  bool isScalar(int index) const;
  FlowFact all() const;
  FlowFact allScalars() const;

private:
  std::vector<const AstNode *> vars_;
  std::map<int, int> indexByDeclId_;
};

using BlockTransfer =
    std::function<FlowFact(const BasicBlock &block, FlowFact fact)>;

struct DataflowResult {
  // Facts at block entry/exit, indexed by block id. For backward problems
  // `out` is the merge over successors and `in` the transferred fact, so
  // the names keep their positional meaning.
  std::vector<FlowFact> in;
  std::vector<FlowFact> out;
  int blockVisits = 0; // transfer applications until the fixpoint
};

/// Chaotic iteration to a fixpoint over the reachable blocks. `init` is the
/// fact entering the entry block; unvisited blocks start from the mode's
/// neutral fact (empty for May, `top` for Must). `transfer` must be
/// monotone on the subset lattice.
DataflowResult solveForward(const Cfg &cfg, const BlockTransfer &transfer,
                            MergeMode merge, const FlowFact &init,
                            const FlowFact &top);

/// Mirror of solveForward on the reversed CFG; `init` enters the exit block.
DataflowResult solveBackward(const Cfg &cfg, const BlockTransfer &transfer,
                             MergeMode merge, const FlowFact &init,
                             const FlowFact &top);

//===----------------------------------------------------------------------===//
// Zero tracking
//===----------------------------------------------------------------------===//

/// Flow-sensitive (not path-sensitive) tracking of which scalar variables
/// are known to be zero. Branch conditions never refine the facts.
struct ZeroAnalysis {
  VarUniverse universe;
  DataflowResult result;
  MergeMode mode;

  ZeroAnalysis(const Cfg &cfg, MergeMode mode);

  /// Fact in force just before the given element executes.
  FlowFact factAt(const Cfg &cfg, int blockId, int elementIndex) const;
  /// Fact after the whole block (used for terminator expressions).
  FlowFact factAfter(int blockId) const;

  static FlowFact transferElement(const VarUniverse &u, const AstNode *element,
                                  FlowFact fact);
};

/// Reports every `/` or `%` whose divisor is a variable marked zero at that
/// element, or the literal 0. checker id "flow.DivideByZero".
std::vector<Report> flowDivZeroCheck(const Cfg &cfg, MergeMode mode);

//===----------------------------------------------------------------------===//
// Definite assignment / uninitialized variables
//===----------------------------------------------------------------------===//

/// Reports reads of scalar variables that are not definitely assigned on
/// every path reaching the read. checker id "flow.UninitVar".
std::vector<Report> uninitCheck(const Cfg &cfg);

//===----------------------------------------------------------------------===//
// Liveness
//===----------------------------------------------------------------------===//

struct LivenessResult {
  VarUniverse universe;
  DataflowResult result;

  explicit LivenessResult(const Cfg &cfg);

  /// Variables live immediately after element `elementIndex` of the block
  /// (-1 gives liveness at block entry, before the first element).
  FlowFact liveAfterElement(const Cfg &cfg, int blockId,
                            int elementIndex) const;
  FlowFact liveAtEntry(int blockId) const;
};

} // namespace minisa
