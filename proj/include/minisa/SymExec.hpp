//===--- SymExec.hpp - Path-sensitive symbolic execution --------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//
//
// The engine interprets one top-level function at a time, building the
// exploded graph on demand with a depth-first walk over the CFG. Values of
// partially evaluated expressions live in the state's Environment, which is
// what lets evaluation suspend at an inlined call and resume after the
// matching CallExit without re-executing side effects.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Cfg.hpp"
#include "minisa/ExplodedGraph.hpp"
#include "minisa/Report.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minisa {

/// Exploration thresholds. The defaults are small enough that every limit
/// is exercised by ordinary tests, and every one can be raised from the
/// command line.
struct AnalysisBudget {
  int maxCallDepth = 4;     // beyond this, calls evaluate conservatively
  int smallFnBlocks = 3;    // functions this small always inline
  int largeCfgBlocks = 14;  // at least this many blocks counts as large
  int maxInlineOfLarge = 2; // inline budget per large function
  int maxBlockVisits = 4;   // per-path visits of one block (loop cap)
  int maxNodes = 50000;     // graph size cap per top-level function
};

struct EngineStats {
  std::int64_t nodesCreated = 0;
  std::int64_t topLevelFunctions = 0;
  std::int64_t pathsTerminatedBlockVisits = 0;
  std::int64_t analysesStoppedMaxNodes = 0;
  std::int64_t inlinedCalls = 0;
  std::int64_t conservativeCallsNoBody = 0;
  std::int64_t conservativeCallsDepthLimit = 0;
  std::int64_t conservativeCallsLargeCfg = 0;
  std::int64_t symbolsConjured = 0;

  std::map<std::string, std::int64_t> toMap() const;
};

/// Value read performed while evaluating an element.
struct ReadRecord {
  const AstNode *expr = nullptr;
  SVal value;
};

class CheckerContext;

/// Path-sensitive check. Hooks run in registration order; any hook may
/// refine the state, attach reports, and/or sink the path through the
/// context. preStmt additionally fires for `/`, `%`, and array accesses
/// right before the operation, with operand values already available.
class Checker {
public:
  virtual ~Checker() = default;
  virtual std::string id() const = 0;
  virtual std::string description() const = 0;

  virtual void preStmt(CheckerContext &, const AstNode *) {}
  virtual void postStmt(CheckerContext &, const AstNode *,
                        const std::vector<ReadRecord> &) {}
  virtual void preCall(CheckerContext &, const AstNode *) {}
  virtual void postCall(CheckerContext &, const AstNode *,
                        const SVal &returnValue, const std::vector<SVal> &) {}
  virtual void branchCondition(CheckerContext &, const AstNode *,
                               const SVal &) {}
  virtual void endOfPath(CheckerContext &) {}
};

class CheckerContext {
public:
  CheckerContext(ProgramState state, int frame, const AstNode *function,
                 SymbolRegistry &symbols)
      : state(std::move(state)), frame(frame), enclosingFunction(function),
        symbols(symbols) {}

  ProgramState state; // checkers replace this to refine the path
  int frame;
  const AstNode *enclosingFunction;
  SymbolRegistry &symbols;
  RangeAlgebra algebra;

  /// Value of an already-evaluated subexpression (environment lookup;
  /// literals fold directly).
  std::optional<SVal> valueOf(const AstNode *expr) const;

  Zeroness zeronessOf(const SVal &value) const;

  void report(const std::string &checker, const std::string &message,
              SourceLocation loc) {
    pending.push_back({checker, message, std::move(loc)});
  }
  void reportAndSink(const std::string &checker, const std::string &message,
                     SourceLocation loc) {
    report(checker, message, std::move(loc));
    sinkRequested = true;
  }

  struct Pending {
    std::string checker;
    std::string message;
    SourceLocation loc;
  };
  std::vector<Pending> pending;
  bool sinkRequested = false;
};

struct EngineOptions {
  AnalysisBudget budget;
  /// The dead-symbol collector. Evaluation scratch in the environment is
  /// always cleared; this switch controls store and constraint collection
  /// (precision-neutral: the same reports come out either way).
  bool collectDeadSymbols = true;
  std::ostream *analysisOutput = nullptr; // sa_dump lines; null = stdout
};

struct TopLevelAnalysis {
  const AstNode *function = nullptr;
  ExplodedGraph graph;
};

struct AnalysisResult {
  std::vector<Report> reports; // deduplicated by hash, in discovery order
  EngineStats stats;
  std::vector<TopLevelAnalysis> topLevels;
  SymbolRegistry symbols;
};

/// Runs every top-level function: bodies are chosen in declaration order
/// (main first when present), skipping functions already inlined during an
/// earlier top-level analysis. `cfgs` must hold one CFG per function with a
/// body, built from the same desugared AST.
AnalysisResult analyzeProgram(const AstNode *program,
                              const std::vector<Cfg> &cfgs,
                              const std::vector<Checker *> &checkers,
                              const EngineOptions &options = {});

/// JSON for --dump-exploded-graph: per top-level function, nodes with
/// rendered state (env, store, constraint strings, gdm keys) and the edge
/// list.
std::string dumpExplodedGraphJson(const AnalysisResult &result);

} // namespace minisa
