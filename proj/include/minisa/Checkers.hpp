//===--- Checkers.hpp - Built-in path-sensitive checks ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SymExec.hpp"

#include <memory>
#include <vector>

namespace minisa {

/// Reports definite division by zero and sinks the path; a divisor that is
/// merely possibly zero is silently assumed nonzero from then on.
class DivZeroChecker : public Checker {
public:
  std::string id() const override { return "core.DivideByZero"; }
  std::string description() const override {
    return "Division or remainder where the divisor is zero";
  }
  void preStmt(CheckerContext &ctx, const AstNode *node) override;
};

/// Reports reads of values no one ever wrote.
class UninitReadChecker : public Checker {
public:
  std::string id() const override { return "core.UninitRead"; }
  std::string description() const override {
    return "Read of an uninitialized variable or array element";
  }
  void postStmt(CheckerContext &ctx, const AstNode *node,
                const std::vector<ReadRecord> &reads) override;
};

/// Reports array accesses provably outside [0, len); a possibly-bad index
/// is assumed in range afterwards.
class ArrayBoundsChecker : public Checker {
public:
  std::string id() const override { return "core.ArrayBounds"; }
  std::string description() const override {
    return "Array element access outside the declared bounds";
  }
  void preStmt(CheckerContext &ctx, const AstNode *node) override;
};

/// Tracks open()/close() handle states in the GDM: double close sinks,
/// handles still open at the end of a path leak.
class StreamChecker : public Checker {
public:
  std::string id() const override { return "resource.Stream"; }
  std::string description() const override {
    return "Misuse of open()/close() resource handles";
  }
  void postCall(CheckerContext &ctx, const AstNode *call, const SVal &ret,
                const std::vector<SVal> &args) override;
  void endOfPath(CheckerContext &ctx) override;
};

/// All path-sensitive checkers, in canonical registration order.
std::vector<std::unique_ptr<Checker>> makeAllCheckers();

} // namespace minisa
