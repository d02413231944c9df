//===--- ExplodedGraph.hpp - (program point, state) graph -------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/ProgramState.hpp"

#include <deque>
#include <map>
#include <vector>

namespace minisa {

/// Position of the interpreter, like an instruction pointer with call-stack
/// context. `frame` identifies the analysis stack frame.
struct ProgramPoint {
  enum class Kind {
    BlockEntrance, // a = block id
    PreStmt,       // a = statement/expression node id
    PostStmt,      // a = statement/expression node id
    BranchTaken,   // a = block id, b = 1 for the true edge
    CallEnter,     // a = call node id, b = callee function node id
    CallExit,      // a = call node id
    EndOfFunction,
  };

  Kind kind = Kind::BlockEntrance;
  int frame = 0;
  int a = -1;
  int b = -1;

  friend bool operator==(const ProgramPoint &x, const ProgramPoint &y) {
    return x.kind == y.kind && x.frame == y.frame && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const ProgramPoint &x, const ProgramPoint &y) {
    if (x.kind != y.kind)
      return x.kind < y.kind;
    if (x.frame != y.frame)
      return x.frame < y.frame;
    if (x.a != y.a)
      return x.a < y.a;
    return x.b < y.b;
  }
};

const char *programPointKindName(ProgramPoint::Kind kind);

struct ExplodedNode {
  int id = 0;
  ProgramPoint point;
  ProgramState state;
  bool sink = false;
  std::vector<int> preds;
  std::vector<int> succs;

  bool isLeaf() const { return succs.empty(); }
};

/// The on-demand graph of (point, state) pairs. At most one node exists per
/// distinct pair: re-deriving a pair adds an edge to the existing node and
/// reports it as not-new, which is what terminates re-exploration.
class ExplodedGraph {
public:
  struct AddResult {
    ExplodedNode *node = nullptr;
    bool isNew = false;
  };

  AddResult getNode(const ProgramPoint &point, ProgramState state);

  void addEdge(int from, int to);

  ExplodedNode &node(int id) { return nodes_[id]; }
  const ExplodedNode &node(int id) const { return nodes_[id]; }
  int size() const { return static_cast<int>(nodes_.size()); }

  const std::vector<int> &roots() const { return roots_; }
  void markRoot(int id) { roots_.push_back(id); }

private:
  std::deque<ExplodedNode> nodes_;
  std::map<std::pair<ProgramPoint, ProgramState>, int> index_;
  std::vector<int> roots_;
};

} // namespace minisa
