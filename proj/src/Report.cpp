//===--- Report.cpp - Diagnostics, runs, suppression, diffing ---*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Report.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace minisa {

namespace {

using Json = nlohmann::ordered_json;

std::string baseName(const std::string &path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string hashHex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

const char *pathEventKindName(PathEvent::Kind kind) {
  switch (kind) {
  case PathEvent::Kind::Event:
    return "Event";
  case PathEvent::Kind::BranchTrue:
    return "BranchTrue";
  case PathEvent::Kind::BranchFalse:
    return "BranchFalse";
  case PathEvent::Kind::CallEnter:
    return "CallEnter";
  case PathEvent::Kind::CallExit:
    return "CallExit";
  }
  return "Event";
}

std::optional<PathEvent::Kind> pathEventKindByName(const std::string &name) {
  if (name == "Event")
    return PathEvent::Kind::Event;
  if (name == "BranchTrue")
    return PathEvent::Kind::BranchTrue;
  if (name == "BranchFalse")
    return PathEvent::Kind::BranchFalse;
  if (name == "CallEnter")
    return PathEvent::Kind::CallEnter;
  if (name == "CallExit")
    return PathEvent::Kind::CallExit;
  return std::nullopt;
}

std::optional<Severity> severityByName(const std::string &name) {
  if (name == "High")
    return Severity::High;
  if (name == "Medium")
    return Severity::Medium;
  if (name == "Low")
    return Severity::Low;
  if (name == "Style")
    return Severity::Style;
  return std::nullopt;
}

} // namespace

const char *severityName(Severity severity) {
  switch (severity) {
  case Severity::High:
    return "High";
  case Severity::Medium:
    return "Medium";
  case Severity::Low:
    return "Low";
  case Severity::Style:
    return "Style";
  }
  return "Low";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t computeReportHash(const Report &report) {
  std::string key = report.checker + ":" + baseName(report.loc.file) + ":" +
                    std::to_string(report.loc.line) + ":" +
                    std::to_string(report.loc.column) + ":" + report.message;
  return fnv1a64(key);
}

Severity severityForChecker(const std::string &checkerId) {
  if (checkerId.rfind("core.", 0) == 0)
    return Severity::High;
  if (checkerId.rfind("flow.", 0) == 0)
    return Severity::Medium;
  if (checkerId.rfind("resource.", 0) == 0)
    return Severity::Medium;
  if (checkerId.rfind("style.", 0) == 0)
    return Severity::Style;
  return Severity::Low;
}

void finalizeReport(Report &report) {
  report.severity = severityForChecker(report.checker);
  report.hash = computeReportHash(report);
  if (report.path.empty())
    report.path.push_back({report.loc, PathEvent::Kind::Event, report.message});
}

void sortAndDedupReports(std::vector<Report> &reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report &a, const Report &b) {
                     auto key = [](const Report &r) {
                       return std::tie(r.loc.file, r.loc.line, r.loc.column,
                                       r.checker, r.message);
                     };
                     return key(a) < key(b);
                   });
  std::set<std::uint64_t> seen;
  std::erase_if(reports,
                [&seen](const Report &r) { return !seen.insert(r.hash).second; });
}

std::vector<Suppression> parseSuppressionFile(const std::string &text) {
  std::vector<Suppression> rules;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos)
      continue;
    line = line.substr(start);

    std::size_t first = line.find(':');
    std::size_t last = line.rfind(':');
    if (first == std::string::npos || first == last)
      continue; // needs checker:file:line
    Suppression rule;
    rule.source = Suppression::Source::File;
    rule.checker = line.substr(0, first);
    rule.file = line.substr(first + 1, last - first - 1);
    std::string lineSpec = line.substr(last + 1);
    if (lineSpec != "*") {
      try {
        rule.line = std::stoi(lineSpec);
      } catch (...) {
        continue;
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<Suppression> scanAnnotationSuppressions(const std::string &source,
                                                    const std::string &file) {
  std::vector<Suppression> rules;
  std::istringstream in(source);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::size_t comment = line.find("//");
    if (comment == std::string::npos)
      continue;
    std::size_t pos = comment;
    static const std::string kMarker = "sa-suppress(";
    while ((pos = line.find(kMarker, pos)) != std::string::npos) {
      std::size_t open = pos + kMarker.size();
      std::size_t close = line.find(')', open);
      if (close == std::string::npos)
        break;
      Suppression rule;
      rule.source = Suppression::Source::Annotation;
      rule.checker = line.substr(open, close - open);
      rule.file = file;
      rule.line = lineNo;
      rules.push_back(std::move(rule));
      pos = close;
    }
  }
  return rules;
}

bool suppressionMatches(const Suppression &rule, const Report &report) {
  if (rule.checker != "*" && rule.checker != report.checker)
    return false;
  if (rule.line && *rule.line != report.loc.line)
    return false;
  // Suffix match at a path component boundary, so runs made in different
  // working directories still line up.
  const std::string &path = report.loc.file;
  const std::string &want = rule.file;
  if (path == want)
    return true;
  if (path.size() > want.size() &&
      path.compare(path.size() - want.size(), want.size(), want) == 0 &&
      path[path.size() - want.size() - 1] == '/')
    return true;
  return false;
}

std::pair<Run, int> applySuppressions(const Run &run,
                                      const std::vector<Suppression> &rules) {
  Run out = run;
  int removed = 0;
  std::erase_if(out.reports, [&](const Report &report) {
    for (const Suppression &rule : rules)
      if (suppressionMatches(rule, report)) {
        ++removed;
        return true;
      }
    return false;
  });
  out.stats["suppressed_reports"] = removed;
  return {out, removed};
}

RunDiff diffRuns(const Run &oldRun, const Run &newRun) {
  std::set<std::uint64_t> oldHashes, newHashes;
  for (const Report &r : oldRun.reports)
    oldHashes.insert(r.hash);
  for (const Report &r : newRun.reports)
    newHashes.insert(r.hash);
  RunDiff diff;
  for (const Report &r : newRun.reports)
    (oldHashes.count(r.hash) ? diff.common : diff.added).push_back(r);
  for (const Report &r : oldRun.reports)
    if (!newHashes.count(r.hash))
      diff.resolved.push_back(r);
  return diff;
}

static std::string renderText(const Run &run) {
  std::ostringstream out;
  for (const Report &report : run.reports) {
    std::string sev = severityName(report.severity);
    for (char &c : sev)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << sev << ": " << report.loc.str() << ": " << report.message << " ["
        << report.checker << "]\n";
    int step = 0;
    for (const PathEvent &event : report.path)
      out << "  " << ++step << ". " << event.loc.str() << ": " << event.note
          << "\n";
  }
  out << run.reports.size() << " report" << (run.reports.size() == 1 ? "" : "s")
      << ".\n";
  return out.str();
}

static std::string renderJson(const Run &run) {
  Json j;
  j["version"] = 1;
  j["run_name"] = run.name;
  j["timestamp"] = run.timestamp;
  j["tool_version"] = run.toolVersion;
  j["stats"] = Json::object();
  for (const auto &[key, value] : run.stats)
    j["stats"][key] = value;
  j["reports"] = Json::array();
  for (const Report &report : run.reports) {
    Json jr;
    jr["hash"] = hashHex(report.hash);
    jr["checker"] = report.checker;
    jr["severity"] = severityName(report.severity);
    jr["message"] = report.message;
    jr["file"] = report.loc.file;
    jr["line"] = report.loc.line;
    jr["col"] = report.loc.column;
    jr["path"] = Json::array();
    for (const PathEvent &event : report.path) {
      Json je;
      je["file"] = event.loc.file;
      je["line"] = event.loc.line;
      je["col"] = event.loc.column;
      je["kind"] = pathEventKindName(event.kind);
      je["note"] = event.note;
      jr["path"].push_back(std::move(je));
    }
    j["reports"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string renderRun(const Run &run, RenderFormat format) {
  return format == RenderFormat::Text ? renderText(run) : renderJson(run);
}

std::optional<Run> parseRunJson(const std::string &text) {
  Json j = Json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    return std::nullopt;
  try {
    if (j.at("version").get<int>() != 1)
      return std::nullopt;
    Run run;
    run.name = j.at("run_name").get<std::string>();
    run.timestamp = j.at("timestamp").get<std::string>();
    run.toolVersion = j.at("tool_version").get<std::string>();
    for (const auto &[key, value] : j.at("stats").items())
      run.stats[key] = value.get<std::int64_t>();
    for (const Json &jr : j.at("reports")) {
      Report report;
      report.hash = std::stoull(jr.at("hash").get<std::string>(), nullptr, 16);
      report.checker = jr.at("checker").get<std::string>();
      auto severity = severityByName(jr.at("severity").get<std::string>());
      if (!severity)
        return std::nullopt;
      report.severity = *severity;
      report.message = jr.at("message").get<std::string>();
      report.loc.file = jr.at("file").get<std::string>();
      report.loc.line = jr.at("line").get<int>();
      report.loc.column = jr.at("col").get<int>();
      for (const Json &je : jr.at("path")) {
        PathEvent event;
        event.loc.file = je.at("file").get<std::string>();
        event.loc.line = je.at("line").get<int>();
        event.loc.column = je.at("col").get<int>();
        auto kind = pathEventKindByName(je.at("kind").get<std::string>());
        if (!kind)
          return std::nullopt;
        event.kind = *kind;
        event.note = je.at("note").get<std::string>();
        report.path.push_back(std::move(event));
      }
      run.reports.push_back(std::move(report));
    }
    return run;
  } catch (...) {
    return std::nullopt;
  }
}

} // namespace minisa
