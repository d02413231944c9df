//===--- Driver.hpp - Whole-pipeline analysis entry points ------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"
#include "minisa/Cfg.hpp"
#include "minisa/Dataflow.hpp"
#include "minisa/Report.hpp"
#include "minisa/SymExec.hpp"
#include "minisa/Token.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace minisa {

/// Frontend output for one file: tokens, the desugared typed AST, per-
/// function CFGs, and the style reports gathered from the surface syntax
/// before desugaring rewrote it.
struct CompiledFile {
  std::string path;
  std::string source;
  AstContext ctx;
  TokenStream tokens;
  AstNode *program = nullptr; // desugared
  std::vector<Cfg> cfgs;
  std::vector<Report> styleReports;
};

/// Runs lexing, parsing, semantic analysis, style checks, desugaring, and
/// CFG construction. Throws FrontendError on invalid input.
CompiledFile compileSource(std::string source, std::string path);

struct AnalyzeConfig {
  std::vector<std::string> inputs;
  std::set<std::string> checkers; // empty = everything enabled
  MergeMode flowMode = MergeMode::May;
  AnalysisBudget budget;
  bool collectDeadSymbols = true;
  std::string runName = "analysis";
  std::string timestamp;        // empty: current UTC time
  std::string suppressionFile;  // optional rules file
  bool dumpTokens = false;
  bool dumpAst = false;
  bool dumpCfg = false;
  bool dumpExplodedGraph = false;
};

struct AnalyzeOutcome {
  Run run;
  int exitCode = 0;  // 0 clean, 1 reports exist, 2 error
  std::string error; // set when exitCode == 2
};

/// The `analyze` workflow: every enabled tier over every input, reports
/// merged, sorted, deduplicated, and suppressed. Dump output and sa_dump
/// lines go to `out`.
AnalyzeOutcome analyzeFiles(const AnalyzeConfig &config, std::ostream &out);

/// id/description pairs for --list-checkers, all tiers included.
std::vector<std::pair<std::string, std::string>> listAllCheckers();

/// Current time as an ISO-8601 UTC stamp.
std::string currentTimestamp();

} // namespace minisa
