//===--- Report.hpp - Diagnostics, runs, suppression, diffing ---*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SourceLocation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minisa {

enum class Severity { High, Medium, Low, Style };

const char *severityName(Severity severity);

struct PathEvent {
  enum class Kind { Event, BranchTrue, BranchFalse, CallEnter, CallExit };
  SourceLocation loc;
  Kind kind = Kind::Event;
  std::string note;

  bool operator==(const PathEvent &o) const {
    return loc == o.loc && kind == o.kind && note == o.note;
  }
};

struct Report {
  std::string checker;
  Severity severity = Severity::Low;
  std::string message;
  SourceLocation loc;
  std::vector<PathEvent> path; // chronological; last event at loc
  std::uint64_t hash = 0;

  bool operator==(const Report &o) const {
    return checker == o.checker && severity == o.severity &&
           message == o.message && loc == o.loc && path == o.path &&
           hash == o.hash;
  }
};

struct Run {
  std::string name;
  std::string timestamp;   // ISO-8601
  std::string toolVersion;
  std::vector<Report> reports;
  std::map<std::string, std::int64_t> stats;

  bool operator==(const Run &o) const {
    return name == o.name && timestamp == o.timestamp &&
           toolVersion == o.toolVersion && reports == o.reports &&
           stats == o.stats;
  }
};

struct Suppression {
  enum class Source { File, Annotation };
  Source source = Source::File;
  std::string checker; // checker id or "*"
  std::string file;
  std::optional<int> line; // nullopt = any line
};

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view data);

/// Hash identifying a defect across runs: FNV-1a 64 over
/// "checker:filebasename:line:column:message". Paths, run names, and
/// timestamps deliberately do not participate.
std::uint64_t computeReportHash(const Report &report);

/// Severity is fixed per checker family: core.* High, flow.* and
/// resource.* Medium, style.* Style.
Severity severityForChecker(const std::string &checkerId);

/// Fills severity and hash from the checker id and identity fields.
void finalizeReport(Report &report);

/// Sorts by (file, line, column, checker) and drops duplicate hashes.
void sortAndDedupReports(std::vector<Report> &reports);

/// One rule per line, "<checker>:<file>:<line|*>"; '#' starts a comment.
/// Malformed lines are ignored.
std::vector<Suppression> parseSuppressionFile(const std::string &text);

/// Scans source text for `// sa-suppress(<checker>)` annotations.
std::vector<Suppression> scanAnnotationSuppressions(const std::string &source,
                                                    const std::string &file);

bool suppressionMatches(const Suppression &rule, const Report &report);

/// Removes every report matching any rule; returns the new run and the
/// number of reports removed (also recorded in stats["suppressed_reports"]).
std::pair<Run, int> applySuppressions(const Run &run,
                                      const std::vector<Suppression> &rules);

struct RunDiff {
  std::vector<Report> added;    // only in the new run
  std::vector<Report> resolved; // only in the old run
  std::vector<Report> common;
};

/// Set difference by report hash.
RunDiff diffRuns(const Run &oldRun, const Run &newRun);

enum class RenderFormat { Text, Json };

std::string renderRun(const Run &run, RenderFormat format);

/// Parses the JSON produced by renderRun; nothing on malformed input.
std::optional<Run> parseRunJson(const std::string &text);

} // namespace minisa
