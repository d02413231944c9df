//===--- Driver.cpp - Whole-pipeline analysis entry points ------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Driver.hpp"

#include "minisa/Checkers.hpp"
#include "minisa/Desugar.hpp"
#include "minisa/Diagnostics.hpp"
#include "minisa/Lexer.hpp"
#include "minisa/Matchers.hpp"
#include "minisa/Parser.hpp"
#include "minisa/Sema.hpp"
#include "minisa/Version.hpp"

#include "json.hpp"

#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace minisa {

namespace {

using Json = nlohmann::ordered_json;

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json tokensToJson(const TokenStream &tokens) {
  Json out = Json::array();
  for (const Token &t : tokens) {
    Json jt;
    jt["kind"] = tokenKindName(t.kind);
    jt["text"] = t.text;
    jt["line"] = t.loc.line;
    jt["col"] = t.loc.column;
    jt["offset"] = t.loc.offset;
    out.push_back(std::move(jt));
  }
  return out;
}

Json astToJson(const AstNode *node) {
  Json jn;
  jn["id"] = node->id;
  jn["kind"] = astKindName(node->kind);
  if (!node->name.empty())
    jn["name"] = node->name;
  if (node->kind == AstKind::IntLit)
    jn["value"] = node->intValue;
  if (node->kind == AstKind::BinaryOp)
    jn["op"] = binaryOpSpelling(node->binaryOp);
  if (node->kind == AstKind::UnaryOp)
    jn["op"] = unaryOpSpelling(node->unaryOp);
  if (node->kind == AstKind::AssignStmt)
    jn["op"] = assignOpSpelling(node->assignOp);
  if (node->type)
    jn["type"] = node->type->str();
  jn["line"] = node->loc.line;
  if (!node->children.empty()) {
    Json kids = Json::array();
    for (const AstNode *child : node->children)
      kids.push_back(astToJson(child));
    jn["children"] = std::move(kids);
  }
  return jn;
}

bool enabled(const AnalyzeConfig &config, const std::string &id) {
  return config.checkers.empty() || config.checkers.count(id) > 0;
}

} // namespace

CompiledFile compileSource(std::string source, std::string path) {
  CompiledFile file;
  file.path = std::move(path);
  file.source = std::move(source);
  file.tokens = tokenize(file.source, file.path);
  file.program = parse(file.tokens, file.ctx);
  analyzeSemantics(file.program);
  file.styleReports = styleChecks(file.tokens, file.program);
  desugar(file.program, file.ctx);
  for (const AstNode *fn : file.program->children)
    if (fn->hasBody)
      file.cfgs.push_back(buildCfg(fn, file.ctx));
  return file;
}

std::string currentTimestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AnalyzeOutcome analyzeFiles(const AnalyzeConfig &config, std::ostream &out) {
  AnalyzeOutcome outcome;
  Run &run = outcome.run;
  run.name = config.runName;
  run.timestamp =
      config.timestamp.empty() ? currentTimestamp() : config.timestamp;
  run.toolVersion = kToolVersion;

  std::vector<Suppression> suppressions;
  if (!config.suppressionFile.empty()) {
    try {
      suppressions = parseSuppressionFile(readFile(config.suppressionFile));
    } catch (const std::exception &e) {
      outcome.exitCode = 2;
      outcome.error = e.what();
      return outcome;
    }
  }

  std::vector<Report> reports;
  for (const std::string &path : config.inputs) {
    CompiledFile file;
    try {
      file = compileSource(readFile(path), path);
    } catch (const std::exception &e) {
      outcome.exitCode = 2;
      outcome.error = e.what();
      return outcome;
    }

    if (config.dumpTokens)
      out << tokensToJson(file.tokens).dump(2) << "\n";
    if (config.dumpAst)
      out << astToJson(file.program).dump(2) << "\n";
    if (config.dumpCfg)
      out << dumpCfgJson(file.cfgs);

    for (const Report &r : file.styleReports)
      if (enabled(config, r.checker))
        reports.push_back(r);

    for (const Cfg &cfg : file.cfgs) {
      if (enabled(config, "flow.DivideByZero"))
        for (Report &r : flowDivZeroCheck(cfg, config.flowMode))
          reports.push_back(std::move(r));
      if (enabled(config, "flow.UninitVar"))
        for (Report &r : uninitCheck(cfg))
          reports.push_back(std::move(r));
    }

    auto allCheckers = makeAllCheckers();
    std::vector<Checker *> active;
    for (const auto &checker : allCheckers)
      if (enabled(config, checker->id()))
        active.push_back(checker.get());

    EngineOptions engineOpts;
    engineOpts.budget = config.budget;
    engineOpts.collectDeadSymbols = config.collectDeadSymbols;
    engineOpts.analysisOutput = &out;
    AnalysisResult result =
        analyzeProgram(file.program, file.cfgs, active, engineOpts);

    if (config.dumpExplodedGraph)
      out << dumpExplodedGraphJson(result);

    for (Report &r : result.reports)
      reports.push_back(std::move(r));
    for (const auto &[key, value] : result.stats.toMap())
      run.stats[key] += value;

    for (Suppression &s :
         scanAnnotationSuppressions(file.source, file.path))
      suppressions.push_back(std::move(s));
  }

  run.stats["files_analyzed"] =
      static_cast<std::int64_t>(config.inputs.size());
  sortAndDedupReports(reports);
  run.reports = std::move(reports);

  auto [suppressed, removedCount] = applySuppressions(run, suppressions);
  run = std::move(suppressed);
  run.stats["suppressed_reports"] = removedCount;

  outcome.exitCode = run.reports.empty() ? 0 : 1;
  return outcome;
}

std::vector<std::pair<std::string, std::string>> listAllCheckers() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &checker : makeAllCheckers())
    out.emplace_back(checker->id(), checker->description());
  out.emplace_back("flow.DivideByZero",
                   "Flow-sensitive division by zero (may/must zero tracking)");
  out.emplace_back("flow.UninitVar",
                   "Flow-sensitive use of a possibly uninitialized variable");
  out.emplace_back("style.TokenDivLiteralZero",
                   "Token pattern: '/' or '%' followed by a literal 0");
  out.emplace_back("style.SelfAssign",
                   "Assignment of a variable or array element to itself");
  out.emplace_back("style.ConstantCondition",
                   "if/while condition is a constant literal");
  return out;
}

} // namespace minisa
