//===--- SVal.hpp - Symbolic values and memory regions ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"
#include "minisa/Constraints.hpp"

#include <optional>
#include <variant>

namespace minisa {

/// Structural name for a storage location: a variable in some frame, or an
/// element of a local array. Element indexes are either concrete or a
/// tracked symbolic expression; anything vaguer is handled by invalidating
/// the whole array instead of naming a region.
struct MemRegion {
  int frame = 0;
  const AstNode *decl = nullptr; // VarDecl or ParamDecl
  std::optional<std::variant<std::int64_t, SymExpr>> element;

  static MemRegion var(int frame, const AstNode *decl) {
    return {frame, decl, std::nullopt};
  }
  static MemRegion elem(int frame, const AstNode *decl,
                        std::variant<std::int64_t, SymExpr> index) {
    return {frame, decl, index};
  }

  bool isElement() const { return element.has_value(); }

  friend bool operator==(const MemRegion &a, const MemRegion &b) {
    return a.frame == b.frame && a.decl->id == b.decl->id &&
           a.element == b.element;
  }
  friend bool operator<(const MemRegion &a, const MemRegion &b) {
    if (a.frame != b.frame)
      return a.frame < b.frame;
    if (a.decl->id != b.decl->id)
      return a.decl->id < b.decl->id;
    return a.element < b.element;
  }

  std::string str(const SymbolRegistry &symbols) const;
};

/// A value the engine computes: nothing was ever written (Undefined), the
/// engine gave up tracking (Unknown), a concrete integer, a tracked
/// symbolic expression, or a storage location (by-reference bindings only).
class SVal {
public:
  enum class Kind { Undefined, Unknown, Concrete, Symbolic, Region };

  SVal() = default; // Undefined

  static SVal undefined() { return SVal(); }
  static SVal unknown() {
    SVal v;
    v.kind_ = Kind::Unknown;
    return v;
  }
  static SVal concrete(std::int64_t value) {
    SVal v;
    v.kind_ = Kind::Concrete;
    v.concrete_ = value;
    return v;
  }
  static SVal symbolic(SymExpr e) {
    SVal v;
    v.kind_ = Kind::Symbolic;
    v.sym_ = e;
    return v;
  }
  static SVal region(MemRegion r) {
    SVal v;
    v.kind_ = Kind::Region;
    v.region_ = std::move(r);
    return v;
  }

  Kind kind() const { return kind_; }
  bool isUndefined() const { return kind_ == Kind::Undefined; }
  bool isUnknown() const { return kind_ == Kind::Unknown; }
  bool isConcrete() const { return kind_ == Kind::Concrete; }
  bool isSymbolic() const { return kind_ == Kind::Symbolic; }
  bool isRegion() const { return kind_ == Kind::Region; }

  std::int64_t asConcrete() const { return concrete_; }
  const SymExpr &asSymbolic() const { return sym_; }
  const MemRegion &asRegion() const { return *region_; }

  friend bool operator==(const SVal &a, const SVal &b) {
    if (a.kind_ != b.kind_)
      return false;
    switch (a.kind_) {
    case Kind::Concrete:
      return a.concrete_ == b.concrete_;
    case Kind::Symbolic:
      return a.sym_ == b.sym_;
    case Kind::Region:
      return *a.region_ == *b.region_;
    default:
      return true;
    }
  }
  friend bool operator<(const SVal &a, const SVal &b) {
    if (a.kind_ != b.kind_)
      return a.kind_ < b.kind_;
    switch (a.kind_) {
    case Kind::Concrete:
      return a.concrete_ < b.concrete_;
    case Kind::Symbolic:
      return a.sym_ < b.sym_;
    case Kind::Region:
      return *a.region_ < *b.region_;
    default:
      return false;
    }
  }

  std::string str(const SymbolRegistry &symbols) const;

private:
  Kind kind_ = Kind::Undefined;
  std::int64_t concrete_ = 0;
  SymExpr sym_{};
  std::optional<MemRegion> region_;
};

} // namespace minisa
