//===--- Cfg.hpp - Control flow graphs of basic blocks ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"

#include <map>
#include <vector>

namespace minisa {

struct Terminator {
  enum class Kind { Jump, CondBranch, Return, Exit };
  Kind kind = Kind::Exit;
  const AstNode *cond = nullptr;       // CondBranch
  const AstNode *returnExpr = nullptr; // Return, may be null
  int target = -1;                     // Jump
  int trueTarget = -1;                 // CondBranch
  int falseTarget = -1;                // CondBranch
};

/// Straight-line run of statements; control transfers only through the
/// terminator. Condition expressions live in the terminator, never in the
/// element list, so analyses can attach branch facts to edges.
struct BasicBlock {
  int id = 0;
  std::vector<const AstNode *> elements;
  Terminator term;
  std::vector<int> preds;
  std::vector<int> succs;
  int rpoIndex = -1; // position in reverse post-order; -1 if unreachable
  bool reachable = false;
};

/// Where an expression node lives inside the CFG; used to resume evaluation
/// after a call returns.
struct CfgOwner {
  int block = -1;
  int elementIndex = -1; // -1 when the owner is the terminator
  bool terminator = false;
};

struct Cfg {
  const AstNode *function = nullptr;
  std::vector<BasicBlock> blocks;
  int entry = 0;
  int exit = 0;
  std::vector<int> rpo; // reachable block ids in reverse post-order
  std::map<int, CfgOwner> exprOwner;      // AST node id -> position
  std::vector<const AstNode *> locals;    // params + VarDecls (incl. temps)

  const BasicBlock &block(int id) const { return blocks[id]; }
  int reachableCount() const { return static_cast<int>(rpo.size()); }
};

/// Builds the CFG for one function with a desugared body. Short-circuit
/// `&&`/`||` become branch structure; `!` in condition position swaps the
/// branch targets. Logical operators used as values are lowered here too,
/// through a synthetic temporary assigned 1/0 on the two arms — such
/// operands are evaluated before the rest of their statement. `ctx` owns
/// the synthetic nodes this creates.
Cfg buildCfg(const AstNode *function, AstContext &ctx);

/// JSON rendering used by --dump-cfg: one object per function with a
/// blocks array of {id, elements, term:{kind, targets}}.
std::string dumpCfgJson(const std::vector<Cfg> &cfgs);

} // namespace minisa
