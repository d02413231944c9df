//===--- ExplodedGraph.cpp - (program point, state) graph -------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/ExplodedGraph.hpp"

namespace minisa {

const char *programPointKindName(ProgramPoint::Kind kind) {
  switch (kind) {
  case ProgramPoint::Kind::BlockEntrance:
    return "BlockEntrance";
  case ProgramPoint::Kind::PreStmt:
    return "PreStmt";
  case ProgramPoint::Kind::PostStmt:
    return "PostStmt";
  case ProgramPoint::Kind::BranchTaken:
    return "BranchTaken";
  case ProgramPoint::Kind::CallEnter:
    return "CallEnter";
  case ProgramPoint::Kind::CallExit:
    return "CallExit";
  case ProgramPoint::Kind::EndOfFunction:
    return "EndOfFunction";
  }
  return "?";
}

ExplodedGraph::AddResult ExplodedGraph::getNode(const ProgramPoint &point,
                                                ProgramState state) {
  auto key = std::make_pair(point, state);
  auto it = index_.find(key);
  if (it != index_.end())
    return {&nodes_[it->second], false};
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  ExplodedNode &node = nodes_.back();
  node.id = id;
  node.point = point;
  node.state = std::move(key.second);
  index_.emplace(std::make_pair(point, node.state), id);
  return {&node, true};
}

void ExplodedGraph::addEdge(int from, int to) {
  nodes_[from].succs.push_back(to);
  nodes_[to].preds.push_back(from);
}

} // namespace minisa
