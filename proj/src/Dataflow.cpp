//===--- Dataflow.cpp - Worklist fixpoint solver and flow checks *- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Dataflow.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace minisa {

namespace {

bool isScalarDecl(const AstNode *decl) {
  if (decl->kind == AstKind::ParamDecl)
    return true;
  return decl->kind == AstKind::VarDecl && !decl->arrayLen;
}

FlowFact merge(MergeMode mode, const FlowFact &a, const FlowFact &b) {
  FlowFact out;
  if (mode == MergeMode::May)
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::inserter(out, out.end()));
  else
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
  return out;
}

void forEachNode(const AstNode *root,
                 const std::function<void(const AstNode *)> &fn) {
  walkPreOrder(root, fn);
}

/// Scalar variables passed by reference to any call inside `root`; a
/// callee may write through these.
std::vector<const AstNode *> byRefScalarArgs(const AstNode *root) {
  std::vector<const AstNode *> out;
  forEachNode(root, [&](const AstNode *n) {
    if (n->kind != AstKind::Call || !n->decl)
      return;
    std::vector<AstNode *> params = n->decl->params();
    for (std::size_t i = 0; i < params.size() && i < n->children.size(); ++i)
      if (params[i]->byRef && n->children[i]->kind == AstKind::VarRef)
        out.push_back(n->children[i]->decl);
  });
  return out;
}

/// Is `node` (a VarRef inside `element`) a value read? Excludes the
/// assignment target and by-reference call arguments.
void collectScalarReads(const AstNode *element,
                        std::vector<const AstNode *> &reads) {
  std::set<const AstNode *> excluded;
  if (element->kind == AstKind::AssignStmt &&
      element->assignLhs()->kind == AstKind::VarRef)
    excluded.insert(element->assignLhs());
  forEachNode(element, [&](const AstNode *n) {
    if (n->kind == AstKind::ArrayIndex)
      excluded.insert(n->indexBase()); // the base names storage, not a value
    if (n->kind != AstKind::Call || !n->decl)
      return;
    std::vector<AstNode *> params = n->decl->params();
    for (std::size_t i = 0; i < params.size() && i < n->children.size(); ++i)
      if (params[i]->byRef && n->children[i]->kind == AstKind::VarRef)
        excluded.insert(n->children[i]);
  });
  forEachNode(element, [&](const AstNode *n) {
    if (n->kind == AstKind::VarRef && !excluded.count(n) && n->decl &&
        isScalarDecl(n->decl))
      reads.push_back(n);
  });
}

} // namespace

//===----------------------------------------------------------------------===//
// VarUniverse
//===----------------------------------------------------------------------===//

VarUniverse::VarUniverse(const Cfg &cfg) {
  for (const AstNode *decl : cfg.locals) {
    indexByDeclId_[decl->id] = static_cast<int>(vars_.size());
    vars_.push_back(decl);
  }
}

int VarUniverse::indexOf(const AstNode *decl) const {
  auto it = indexByDeclId_.find(decl->id);
  return it == indexByDeclId_.end() ? -1 : it->second;
}

bool VarUniverse::isScalar(int index) const {
  return isScalarDecl(vars_[index]);
}

FlowFact VarUniverse::all() const {
  FlowFact out;
  for (int i = 0; i < size(); ++i)
    out.insert(i);
  return out;
}

FlowFact VarUniverse::allScalars() const {
  FlowFact out;
  for (int i = 0; i < size(); ++i)
    if (isScalar(i))
      out.insert(i);
  return out;
}

//===----------------------------------------------------------------------===//
// Generic worklist solver
//===----------------------------------------------------------------------===//

DataflowResult solveForward(const Cfg &cfg, const BlockTransfer &transfer,
                            MergeMode mode, const FlowFact &init,
                            const FlowFact &top) {
  const FlowFact neutral = mode == MergeMode::Must ? top : FlowFact{};
  DataflowResult r;
  r.in.assign(cfg.blocks.size(), neutral);
  r.out.assign(cfg.blocks.size(), neutral);

  std::deque<int> worklist(cfg.rpo.begin(), cfg.rpo.end());
  std::vector<bool> queued(cfg.blocks.size(), false);
  for (int b : cfg.rpo)
    queued[b] = true;

  while (!worklist.empty()) {
    int id = worklist.front();
    worklist.pop_front();
    queued[id] = false;
    const BasicBlock &block = cfg.blocks[id];

    FlowFact inFact;
    if (id == cfg.entry) {
      inFact = init;
    } else {
      bool first = true;
      for (int p : block.preds) {
        if (!cfg.blocks[p].reachable)
          continue;
        inFact = first ? r.out[p] : merge(mode, inFact, r.out[p]);
        first = false;
      }
      if (first)
        inFact = neutral;
    }

    FlowFact outFact = transfer(block, inFact);
    ++r.blockVisits;
    r.in[id] = std::move(inFact);
    if (outFact != r.out[id]) {
      r.out[id] = std::move(outFact);
      for (int s : block.succs)
        if (cfg.blocks[s].reachable && !queued[s]) {
          queued[s] = true;
          worklist.push_back(s);
        }
    }
  }
  return r;
}

DataflowResult solveBackward(const Cfg &cfg, const BlockTransfer &transfer,
                             MergeMode mode, const FlowFact &init,
                             const FlowFact &top) {
  const FlowFact neutral = mode == MergeMode::Must ? top : FlowFact{};
  DataflowResult r;
  r.in.assign(cfg.blocks.size(), neutral);
  r.out.assign(cfg.blocks.size(), neutral);

  std::deque<int> worklist(cfg.rpo.rbegin(), cfg.rpo.rend()); // post-order
  std::vector<bool> queued(cfg.blocks.size(), false);
  for (int b : cfg.rpo)
    queued[b] = true;

  while (!worklist.empty()) {
    int id = worklist.front();
    worklist.pop_front();
    queued[id] = false;
    const BasicBlock &block = cfg.blocks[id];

    FlowFact outFact;
    if (id == cfg.exit) {
      outFact = init;
    } else {
      bool first = true;
      for (int s : block.succs) {
        outFact = first ? r.in[s] : merge(mode, outFact, r.in[s]);
        first = false;
      }
      if (first)
        outFact = neutral;
    }

    FlowFact inFact = transfer(block, outFact);
    ++r.blockVisits;
    r.out[id] = std::move(outFact);
    if (inFact != r.in[id]) {
      r.in[id] = std::move(inFact);
      for (int p : block.preds)
        if (cfg.blocks[p].reachable && !queued[p]) {
          queued[p] = true;
          worklist.push_back(p);
        }
    }
  }
  return r;
}

//===----------------------------------------------------------------------===//
// Zero tracking
//===----------------------------------------------------------------------===//

FlowFact ZeroAnalysis::transferElement(const VarUniverse &u,
                                       const AstNode *element, FlowFact fact) {
  // A call may write through any by-reference argument.
  for (const AstNode *decl : byRefScalarArgs(element))
    fact.erase(u.indexOf(decl));

  const AstNode *target = nullptr;
  const AstNode *value = nullptr;
  if (element->kind == AstKind::VarDecl && !element->arrayLen) {
    target = element;
    value = element->varInit(); // may be null: declared but unknown
  } else if (element->kind == AstKind::AssignStmt &&
             element->assignLhs()->kind == AstKind::VarRef) {
    target = element->assignLhs()->decl;
    value = element->assignRhs();
  }
  if (!target)
    return fact;

  int index = u.indexOf(target);
  if (index < 0 || !u.isScalar(index))
    return fact;

  if (value && value->kind == AstKind::IntLit) {
    if (value->intValue == 0)
      fact.insert(index);
    else
      fact.erase(index);
  } else if (value && value->kind == AstKind::VarRef && value->decl &&
             isScalarDecl(value->decl)) {
    int source = u.indexOf(value->decl);
    if (source >= 0 && fact.count(source))
      fact.insert(index);
    else
      fact.erase(index);
  } else {
    fact.erase(index); // any compound right-hand side clears the mark
  }
  return fact;
}

ZeroAnalysis::ZeroAnalysis(const Cfg &cfg, MergeMode m)
    : universe(cfg), mode(m) {
  const VarUniverse &u = universe;
  BlockTransfer transfer = [&u](const BasicBlock &block, FlowFact fact) {
    for (const AstNode *element : block.elements)
      fact = transferElement(u, element, std::move(fact));
    return fact;
  };
  result = solveForward(cfg, transfer, mode, FlowFact{}, universe.allScalars());
}

FlowFact ZeroAnalysis::factAt(const Cfg &cfg, int blockId,
                              int elementIndex) const {
  FlowFact fact = result.in[blockId];
  const BasicBlock &block = cfg.blocks[blockId];
  for (int i = 0; i < elementIndex; ++i)
    fact = transferElement(universe, block.elements[i], std::move(fact));
  return fact;
}

FlowFact ZeroAnalysis::factAfter(int blockId) const {
  return result.out[blockId];
}

std::vector<Report> flowDivZeroCheck(const Cfg &cfg, MergeMode mode) {
  ZeroAnalysis analysis(cfg, mode);
  std::vector<Report> reports;

  auto scanExpr = [&](const AstNode *root, const FlowFact &fact) {
    forEachNode(root, [&](const AstNode *n) {
      if (n->kind != AstKind::BinaryOp ||
          (n->binaryOp != BinaryOpKind::Div && n->binaryOp != BinaryOpKind::Rem))
        return;
      const AstNode *divisor = n->rhs();
      bool zero = false;
      if (divisor->kind == AstKind::IntLit && divisor->intValue == 0)
        zero = true;
      else if (divisor->kind == AstKind::VarRef && divisor->decl &&
               isScalarDecl(divisor->decl)) {
        int index = analysis.universe.indexOf(divisor->decl);
        zero = index >= 0 && fact.count(index) > 0;
      }
      if (!zero)
        return;
      Report report;
      report.checker = "flow.DivideByZero";
      report.message = "Division by zero";
      report.loc = n->loc;
      finalizeReport(report);
      reports.push_back(std::move(report));
    });
  };

  for (int id : cfg.rpo) {
    const BasicBlock &block = cfg.blocks[id];
    for (std::size_t i = 0; i < block.elements.size(); ++i)
      scanExpr(block.elements[i],
               analysis.factAt(cfg, id, static_cast<int>(i)));
    FlowFact after = analysis.factAfter(id);
    if (block.term.cond)
      scanExpr(block.term.cond, after);
    if (block.term.returnExpr)
      scanExpr(block.term.returnExpr, after);
  }
  return reports;
}

//===----------------------------------------------------------------------===//
// Definite assignment
//===----------------------------------------------------------------------===//

namespace {

FlowFact assignedTransferElement(const VarUniverse &u, const AstNode *element,
                                 FlowFact fact) {
  for (const AstNode *decl : byRefScalarArgs(element))
    fact.insert(u.indexOf(decl)); // the callee may have written it

  if (element->kind == AstKind::VarDecl && !element->arrayLen) {
    int index = u.indexOf(element);
    if (element->varInit())
      fact.insert(index);
    else
      fact.erase(index); // fresh declaration, value unknown again
  } else if (element->kind == AstKind::AssignStmt &&
             element->assignLhs()->kind == AstKind::VarRef) {
    int index = u.indexOf(element->assignLhs()->decl);
    if (index >= 0)
      fact.insert(index);
  }
  return fact;
}

} // namespace

std::vector<Report> uninitCheck(const Cfg &cfg) {
  VarUniverse universe(cfg);

  FlowFact init;
  for (const AstNode *param : cfg.function->params())
    init.insert(universe.indexOf(param)); // by-ref and by-value both count

  BlockTransfer transfer = [&universe](const BasicBlock &block,
                                       FlowFact fact) {
    for (const AstNode *element : block.elements)
      fact = assignedTransferElement(universe, element, std::move(fact));
    return fact;
  };
  DataflowResult assigned = solveForward(cfg, transfer, MergeMode::Must, init,
                                         universe.allScalars());

  std::vector<Report> reports;
  auto reportReads = [&](const AstNode *root, const FlowFact &fact) {
    std::vector<const AstNode *> reads;
    collectScalarReads(root, reads);
    for (const AstNode *read : reads) {
      int index = universe.indexOf(read->decl);
      if (index < 0 || fact.count(index))
        continue;
      Report report;
      report.checker = "flow.UninitVar";
      report.message =
          "Variable '" + read->name + "' may be uninitialized when used";
      report.loc = read->loc;
      finalizeReport(report);
      reports.push_back(std::move(report));
    }
  };

  for (int id : cfg.rpo) {
    const BasicBlock &block = cfg.blocks[id];
    FlowFact fact = assigned.in[id];
    for (const AstNode *element : block.elements) {
      reportReads(element, fact); // reads happen before the write lands
      fact = assignedTransferElement(universe, element, std::move(fact));
    }
    if (block.term.cond)
      reportReads(block.term.cond, fact);
    if (block.term.returnExpr)
      reportReads(block.term.returnExpr, fact);
  }
  return reports;
}

//===----------------------------------------------------------------------===//
// Liveness
//===----------------------------------------------------------------------===//

namespace {

/// live' = uses(element) ∪ (live − defs(element)).
FlowFact livenessTransferElement(const VarUniverse &u, const AstNode *element,
                                 FlowFact live) {
  // Defs: whole-variable writes only. An array element write keeps the
  // array live (partial definition).
  if (element->kind == AstKind::VarDecl) {
    live.erase(u.indexOf(element));
  } else if (element->kind == AstKind::AssignStmt &&
             element->assignLhs()->kind == AstKind::VarRef) {
    live.erase(u.indexOf(element->assignLhs()->decl));
  }

  // Uses: every variable whose storage the element may read or pass on.
  forEachNode(element, [&](const AstNode *n) {
    const AstNode *decl = nullptr;
    if (n->kind == AstKind::VarRef && n->decl)
      decl = n->decl;
    if (element->kind == AstKind::AssignStmt && n == element->assignLhs())
      decl = nullptr; // pure definition
    if (decl) {
      int index = u.indexOf(decl);
      if (index >= 0)
        live.insert(index);
    }
  });
  if (element->kind == AstKind::VarDecl && !element->varInit())
    live.erase(u.indexOf(element));
  return live;
}

FlowFact livenessUsesOfExpr(const VarUniverse &u, const AstNode *expr,
                            FlowFact live) {
  forEachNode(expr, [&](const AstNode *n) {
    if (n->kind == AstKind::VarRef && n->decl) {
      int index = u.indexOf(n->decl);
      if (index >= 0)
        live.insert(index);
    }
  });
  return live;
}

} // namespace

LivenessResult::LivenessResult(const Cfg &cfg) : universe(cfg) {
  const VarUniverse &u = universe;
  BlockTransfer transfer = [&u](const BasicBlock &block, FlowFact live) {
    if (block.term.cond)
      live = livenessUsesOfExpr(u, block.term.cond, std::move(live));
    if (block.term.returnExpr)
      live = livenessUsesOfExpr(u, block.term.returnExpr, std::move(live));
    for (auto it = block.elements.rbegin(); it != block.elements.rend(); ++it)
      live = livenessTransferElement(u, *it, std::move(live));
    return live;
  };
  result = solveBackward(cfg, transfer, MergeMode::May, FlowFact{}, u.all());
}

FlowFact LivenessResult::liveAfterElement(const Cfg &cfg, int blockId,
                                          int elementIndex) const {
  const BasicBlock &block = cfg.blocks[blockId];
  FlowFact live = result.out[blockId];
  if (block.term.cond)
    live = livenessUsesOfExpr(universe, block.term.cond, std::move(live));
  if (block.term.returnExpr)
    live = livenessUsesOfExpr(universe, block.term.returnExpr, std::move(live));
  for (int i = static_cast<int>(block.elements.size()) - 1; i > elementIndex;
       --i)
    live = livenessTransferElement(universe, block.elements[i],
                                   std::move(live));
  return live;
}

FlowFact LivenessResult::liveAtEntry(int blockId) const {
  return result.in[blockId];
}

} // namespace minisa
