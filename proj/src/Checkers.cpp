//===--- Checkers.cpp - Built-in path-sensitive checks ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Checkers.hpp"

#include <map>

namespace minisa {

//===----------------------------------------------------------------------===//
// core.DivideByZero
//===----------------------------------------------------------------------===//

void DivZeroChecker::preStmt(CheckerContext &ctx, const AstNode *node) {
  if (node->kind != AstKind::BinaryOp ||
      (node->binaryOp != BinaryOpKind::Div &&
       node->binaryOp != BinaryOpKind::Rem))
    return;
  auto divisor = ctx.valueOf(node->rhs());
  if (!divisor)
    return;
  switch (ctx.zeronessOf(*divisor)) {
  case Zeroness::OnlyZero:
    ctx.reportAndSink(id(), "Division by zero", node->loc);
    return;
  case Zeroness::NeverZero:
    return;
  case Zeroness::MaybeZero:
    // No warning: carry on under the assumption the divisor is nonzero.
    if (divisor->isSymbolic()) {
      if (auto refined = assume(ctx.state.constraints, divisor->asSymbolic(),
                                RangeAlgebra::Rel::Ne, 0, true, ctx.algebra))
        ctx.state.constraints = std::move(*refined);
    }
    return;
  }
}

//===----------------------------------------------------------------------===//
// core.UninitRead
//===----------------------------------------------------------------------===//

void UninitReadChecker::postStmt(CheckerContext &ctx, const AstNode *,
                                 const std::vector<ReadRecord> &reads) {
  for (const ReadRecord &read : reads) {
    if (!read.value.isUndefined())
      continue;
    std::string message =
        read.expr->kind == AstKind::ArrayIndex
            ? "Read of uninitialized array element of '" +
                  read.expr->indexBase()->name + "'"
            : "Read of uninitialized variable '" + read.expr->name + "'";
    ctx.reportAndSink(id(), message, read.expr->loc);
    return;
  }
}

//===----------------------------------------------------------------------===//
// core.ArrayBounds
//===----------------------------------------------------------------------===//

void ArrayBoundsChecker::preStmt(CheckerContext &ctx, const AstNode *node) {
  if (node->kind != AstKind::ArrayIndex)
    return;
  const AstNode *base = node->indexBase();
  if (!base->decl || !base->decl->arrayLen)
    return;
  std::int64_t len = *base->decl->arrayLen;
  auto index = ctx.valueOf(node->indexExpr());
  if (!index)
    return;

  if (index->isConcrete()) {
    std::int64_t i = index->asConcrete();
    if (i < 0 || i >= len)
      ctx.reportAndSink(id(),
                        "Array index " + std::to_string(i) +
                            " is out of bounds (array '" + base->name +
                            "' has " + std::to_string(len) + " elements)",
                        node->loc);
    return;
  }
  if (!index->isSymbolic())
    return;

  const SymExpr &se = index->asSymbolic();
  RangeSet range = effectiveRange(ctx.state.constraints, se, ctx.algebra);
  RangeSet valid = RangeSet::of(0, len - 1);
  RangeSet overlap = ctx.algebra.intersect(range, valid);
  if (overlap.isEmpty()) {
    ctx.reportAndSink(id(),
                      "Array index is out of bounds (array '" + base->name +
                          "' has " + std::to_string(len) + " elements)",
                      node->loc);
    return;
  }
  // Possible but not certain: assume the access is in bounds from here on.
  auto lower = assume(ctx.state.constraints, se, RangeAlgebra::Rel::Ge, 0,
                      true, ctx.algebra);
  if (!lower)
    return;
  auto upper =
      assume(*lower, se, RangeAlgebra::Rel::Le, len - 1, true, ctx.algebra);
  if (upper)
    ctx.state.constraints = std::move(*upper);
}

//===----------------------------------------------------------------------===//
// resource.Stream
//===----------------------------------------------------------------------===//

namespace {

enum class HandleState { Open, Closed };

class StreamGdm : public GdmEntry {
public:
  std::map<SymbolId, HandleState> handles;

  bool equals(const GdmEntry &other) const override {
    const auto *o = dynamic_cast<const StreamGdm *>(&other);
    return o && handles == o->handles;
  }
  bool less(const GdmEntry &other) const override {
    const auto *o = dynamic_cast<const StreamGdm *>(&other);
    return o && handles < o->handles;
  }
};

const char *const kStreamKey = "resource.Stream";

} // namespace

void StreamChecker::postCall(CheckerContext &ctx, const AstNode *call,
                             const SVal &ret, const std::vector<SVal> &args) {
  if (call->intrinsic == Intrinsic::Open) {
    if (!ret.isSymbolic() || !ret.asSymbolic().isAtom())
      return;
    auto next = std::make_shared<StreamGdm>();
    if (auto prev = std::dynamic_pointer_cast<const StreamGdm>(
            ctx.state.lookupGdm(kStreamKey)))
      next->handles = prev->handles;
    next->handles[ret.asSymbolic().sym] = HandleState::Open;
    ctx.state.gdm[kStreamKey] = std::move(next);
    return;
  }
  if (call->intrinsic != Intrinsic::Close)
    return;
  if (args.empty() || !args[0].isSymbolic() || !args[0].asSymbolic().isAtom())
    return; // closing something we never tracked: not our business
  SymbolId handle = args[0].asSymbolic().sym;
  auto prev = std::dynamic_pointer_cast<const StreamGdm>(
      ctx.state.lookupGdm(kStreamKey));
  if (!prev || !prev->handles.count(handle))
    return;
  if (prev->handles.at(handle) == HandleState::Closed) {
    ctx.reportAndSink(id(), "Handle is closed a second time", call->loc);
    return;
  }
  auto next = std::make_shared<StreamGdm>();
  next->handles = prev->handles;
  next->handles[handle] = HandleState::Closed;
  ctx.state.gdm[kStreamKey] = std::move(next);
}

void StreamChecker::endOfPath(CheckerContext &ctx) {
  auto entry = std::dynamic_pointer_cast<const StreamGdm>(
      ctx.state.lookupGdm(kStreamKey));
  if (!entry)
    return;
  for (const auto &[handle, state] : entry->handles) {
    (void)handle;
    if (state == HandleState::Open) {
      ctx.report(id(), "Opened handle is never closed",
                 ctx.enclosingFunction->endLoc);
      return; // one leak report per path is enough
    }
  }
}

std::vector<std::unique_ptr<Checker>> makeAllCheckers() {
  std::vector<std::unique_ptr<Checker>> checkers;
  checkers.push_back(std::make_unique<DivZeroChecker>());
  checkers.push_back(std::make_unique<UninitReadChecker>());
  checkers.push_back(std::make_unique<ArrayBoundsChecker>());
  checkers.push_back(std::make_unique<StreamChecker>());
  return checkers;
}

} // namespace minisa
