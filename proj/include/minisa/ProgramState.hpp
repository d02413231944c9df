//===--- ProgramState.hpp - Immutable symbolic state ------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SVal.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>

namespace minisa {

/// Checker-owned data stored in the generic data map. Entries must be
/// comparable so states containing them can be deduplicated structurally.
class GdmEntry {
public:
  virtual ~GdmEntry() = default;
  virtual bool equals(const GdmEntry &other) const = 0;
  virtual bool less(const GdmEntry &other) const = 0;
};

using GdmMap = std::map<std::string, std::shared_ptr<const GdmEntry>>;

/// One symbolic state: expression values per frame (Environment), memory
/// bindings (Store), checker data (GDM), and path constraints. States are
/// values; every transition works on a copy, and structural comparison
/// drives exploded-node deduplication.
struct ProgramState {
  using EnvKey = std::pair<int, int>; // (frame, expression node id)

  std::map<EnvKey, SVal> env;
  std::map<MemRegion, SVal> store;
  GdmMap gdm;
  ConstraintMap constraints;

  const SVal *lookupEnv(int frame, int exprId) const {
    auto it = env.find({frame, exprId});
    return it == env.end() ? nullptr : &it->second;
  }
  const SVal *lookupStore(const MemRegion &region) const {
    auto it = store.find(region);
    return it == store.end() ? nullptr : &it->second;
  }
  std::shared_ptr<const GdmEntry> lookupGdm(const std::string &key) const {
    auto it = gdm.find(key);
    return it == gdm.end() ? nullptr : it->second;
  }

  bool operator==(const ProgramState &o) const;
  bool operator<(const ProgramState &o) const;
};

} // namespace minisa
