//===--- minisa.cpp - Command line driver -----------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Driver.hpp"
#include "minisa/Version.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace minisa;

namespace {

std::optional<std::string> readFileText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Expands @listfile arguments: one input path per line, '#' comments.
std::optional<std::vector<std::string>>
expandInputs(const std::vector<std::string> &raw, std::string &error) {
  std::vector<std::string> inputs;
  for (const std::string &arg : raw) {
    if (arg.empty() || arg[0] != '@') {
      inputs.push_back(arg);
      continue;
    }
    auto text = readFileText(arg.substr(1));
    if (!text) {
      error = "cannot open list file '" + arg.substr(1) + "'";
      return std::nullopt;
    }
    std::istringstream in(*text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      std::size_t hash = line.find('#');
      if (hash != std::string::npos)
        line = line.substr(0, hash);
      std::size_t begin = line.find_first_not_of(" \t");
      if (begin == std::string::npos)
        continue;
      std::size_t end = line.find_last_not_of(" \t");
      inputs.push_back(line.substr(begin, end - begin + 1));
    }
  }
  return inputs;
}

bool applyBudgetSpec(const std::string &spec, AnalysisBudget &budget,
                     std::string &error) {
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      error = "budget entry '" + item + "' is not key=value";
      return false;
    }
    std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (...) {
      error = "budget value in '" + item + "' is not a number";
      return false;
    }
    if (value <= 0) {
      error = "budget value in '" + item + "' must be positive";
      return false;
    }
    if (key == "maxCallDepth")
      budget.maxCallDepth = static_cast<int>(value);
    else if (key == "smallFnBlocks")
      budget.smallFnBlocks = static_cast<int>(value);
    else if (key == "largeCfgBlocks")
      budget.largeCfgBlocks = static_cast<int>(value);
    else if (key == "maxInlineOfLarge")
      budget.maxInlineOfLarge = static_cast<int>(value);
    else if (key == "maxBlockVisits")
      budget.maxBlockVisits = static_cast<int>(value);
    else if (key == "maxNodes")
      budget.maxNodes = static_cast<int>(value);
    else {
      error = "unknown budget key '" + key + "'";
      return false;
    }
  }
  return true;
}

void printReports(const std::vector<Report> &reports) {
  Run view;
  view.reports = reports;
  std::cout << renderRun(view, RenderFormat::Text);
}

int cmdAnalyze(const std::vector<std::string> &rawInputs,
               const std::string &checkersCsv, const std::string &flowMode,
               const std::string &budgetSpec, const std::string &suppressFile,
               const std::string &timestamp, const std::string &output,
               bool dumpTokens, bool dumpAst, bool dumpCfg, bool dumpExploded,
               const std::string &runName) {
  AnalyzeConfig config;
  std::string error;
  auto inputs = expandInputs(rawInputs, error);
  if (!inputs) {
    std::cerr << "minisa: " << error << "\n";
    return 2;
  }
  config.inputs = std::move(*inputs);
  if (config.inputs.empty()) {
    std::cerr << "minisa: no input files\n";
    return 2;
  }

  if (!checkersCsv.empty()) {
    std::set<std::string> known;
    for (const auto &[id, doc] : listAllCheckers()) {
      (void)doc;
      known.insert(id);
    }
    std::istringstream in(checkersCsv);
    std::string id;
    while (std::getline(in, id, ',')) {
      if (!known.count(id)) {
        std::cerr << "minisa: unknown checker '" << id << "'\n";
        return 2;
      }
      config.checkers.insert(id);
    }
  }

  if (flowMode == "may")
    config.flowMode = MergeMode::May;
  else if (flowMode == "must")
    config.flowMode = MergeMode::Must;
  else {
    std::cerr << "minisa: --flow-mode must be 'may' or 'must'\n";
    return 2;
  }

  if (!budgetSpec.empty() && !applyBudgetSpec(budgetSpec, config.budget, error)) {
    std::cerr << "minisa: " << error << "\n";
    return 2;
  }

  config.suppressionFile = suppressFile;
  config.timestamp = timestamp;
  config.runName = runName;
  config.dumpTokens = dumpTokens;
  config.dumpAst = dumpAst;
  config.dumpCfg = dumpCfg;
  config.dumpExplodedGraph = dumpExploded;

  AnalyzeOutcome outcome = analyzeFiles(config, std::cout);
  if (outcome.exitCode == 2) {
    std::cerr << "minisa: " << outcome.error << "\n";
    return 2;
  }

  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "minisa: cannot write '" << output << "'\n";
      return 2;
    }
    out << renderRun(outcome.run, RenderFormat::Json);
  }
  std::cout << renderRun(outcome.run, RenderFormat::Text);
  return outcome.exitCode;
}

int cmdPrint(const std::string &path, const std::string &format) {
  auto text = readFileText(path);
  if (!text) {
    std::cerr << "minisa: cannot open '" << path << "'\n";
    return 2;
  }
  auto run = parseRunJson(*text);
  if (!run) {
    std::cerr << "minisa: '" << path << "' is not a valid run file\n";
    return 2;
  }
  if (format == "json")
    std::cout << renderRun(*run, RenderFormat::Json);
  else if (format == "text")
    std::cout << renderRun(*run, RenderFormat::Text);
  else {
    std::cerr << "minisa: --format must be 'text' or 'json'\n";
    return 2;
  }
  return 0;
}

int cmdDiff(const std::string &oldPath, const std::string &newPath,
            bool onlyNew, bool onlyResolved) {
  auto oldText = readFileText(oldPath);
  auto newText = readFileText(newPath);
  if (!oldText || !newText) {
    std::cerr << "minisa: cannot open run files\n";
    return 2;
  }
  auto oldRun = parseRunJson(*oldText);
  auto newRun = parseRunJson(*newText);
  if (!oldRun || !newRun) {
    std::cerr << "minisa: invalid run file\n";
    return 2;
  }
  RunDiff diff = diffRuns(*oldRun, *newRun);

  bool showNew = onlyNew || !onlyResolved;
  bool showResolved = onlyResolved || !onlyNew;
  bool any = false;
  if (showNew) {
    std::cout << "New reports (" << diff.added.size() << "):\n";
    printReports(diff.added);
    any = any || !diff.added.empty();
  }
  if (showResolved) {
    std::cout << "Resolved reports (" << diff.resolved.size() << "):\n";
    printReports(diff.resolved);
    any = any || !diff.resolved.empty();
  }
  return any ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"minisa - a miniature static analysis toolchain for MiniC"};
  app.set_version_flag("--version", kToolVersion);

  bool listCheckers = false;
  app.add_flag("--list-checkers", listCheckers,
               "List all checker ids and exit");

  // analyze
  auto *analyze = app.add_subcommand("analyze", "Analyze MiniC sources");
  std::vector<std::string> inputs;
  std::string checkersCsv, flowMode = "may", budgetSpec, suppressFile;
  std::string timestamp, output, runName = "analysis";
  bool dumpTokens = false, dumpAst = false, dumpCfg = false,
       dumpExploded = false;
  analyze->add_option("files", inputs, "Input files or @listfile");
  analyze->add_option("--checkers", checkersCsv,
                      "Comma-separated checker ids to enable");
  analyze->add_option("--flow-mode", flowMode, "may|must merge for flow checks");
  analyze->add_option("--budget", budgetSpec,
                      "Budget overrides, e.g. maxCallDepth=2,maxNodes=1000");
  analyze->add_option("--suppress", suppressFile, "Suppression rules file");
  analyze->add_option("--timestamp", timestamp,
                      "Pin the run timestamp (for reproducible output)");
  analyze->add_option("--run-name", runName, "Name recorded in the run file");
  analyze->add_option("-o,--output", output, "Write the run as JSON here");
  analyze->add_flag("--dump-tokens", dumpTokens, "Dump the token stream");
  analyze->add_flag("--dump-ast", dumpAst, "Dump the typed AST");
  analyze->add_flag("--dump-cfg", dumpCfg, "Dump the control flow graphs");
  analyze->add_flag("--dump-exploded-graph", dumpExploded,
                    "Dump the exploded graphs");

  // print
  auto *print = app.add_subcommand("print", "Render a stored run");
  std::string printPath, printFormat = "text";
  print->add_option("run", printPath, "Run file")->required();
  print->add_option("--format", printFormat, "text|json");

  // diff
  auto *diffCmd = app.add_subcommand("diff", "Diff two stored runs");
  std::string diffOld, diffNew;
  bool onlyNew = false, onlyResolved = false;
  diffCmd->add_option("old", diffOld, "Baseline run file")->required();
  diffCmd->add_option("new", diffNew, "New run file")->required();
  diffCmd->add_flag("--new", onlyNew, "Show only newly introduced reports");
  diffCmd->add_flag("--resolved", onlyResolved, "Show only resolved reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (listCheckers) {
    for (const auto &[id, doc] : listAllCheckers())
      std::cout << id << " - " << doc << "\n";
    return 0;
  }

  if (analyze->parsed())
    return cmdAnalyze(inputs, checkersCsv, flowMode, budgetSpec, suppressFile,
                      timestamp, output, dumpTokens, dumpAst, dumpCfg,
                      dumpExploded, runName);
  if (print->parsed())
    return cmdPrint(printPath, printFormat);
  if (diffCmd->parsed())
    return cmdDiff(diffOld, diffNew, onlyNew, onlyResolved);

  std::cout << app.help();
  return 2;
}
