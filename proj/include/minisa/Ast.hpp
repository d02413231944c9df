//===--- Ast.hpp - MiniC abstract syntax tree -------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//
//
// One uniform node type carries the whole tree: a kind tag, ordered
// children, and a small payload. Child layout per kind:
//
//   Program      [FunctionDecl...]
//   FunctionDecl [ParamDecl..., Block]        (prototypes have no Block)
//   ParamDecl    []                           byRef flag
//   VarDecl      [] or [init expr]            optional arrayLen
//   Block        [stmt...]
//   IfStmt       [cond, then] or [cond, then, else]
//   WhileStmt    [cond, body]
//   ForStmt      [init?, cond?, step?, body]  presence flags in the node
//   ReturnStmt   [] or [expr]
//   ExprStmt     [Call]
//   AssignStmt   [lvalue, expr]               assignOp
//   EmptyStmt    []
//   IntLit       []                           intValue
//   VarRef       []                           name, decl binding
//   ArrayIndex   [VarRef base, index expr]
//   UnaryOp      [operand]                    unaryOp
//   BinaryOp     [lhs, rhs]                   binaryOp
//   Call         [arg...]                     callee name, decl/intrinsic
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SourceLocation.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace minisa {

enum class AstKind {
  Program,
  FunctionDecl,
  ParamDecl,
  VarDecl,
  Block,
  IfStmt,
  WhileStmt,
  ForStmt,
  ReturnStmt,
  ExprStmt,
  AssignStmt,
  EmptyStmt,
  IntLit,
  VarRef,
  ArrayIndex,
  UnaryOp,
  BinaryOp,
  Call,
};

enum class BinaryOpKind {
  Add,
  Sub,
  Mul,
  Div,
  Rem,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,
  Ne,
  LogicalAnd,
  LogicalOr,
};

enum class UnaryOpKind { Neg, LogicalNot };

enum class AssignOpKind { Assign, AddAssign, SubAssign, MulAssign, DivAssign };

/// Functions with well-known semantics that are declared implicitly.
enum class Intrinsic { None, Input, Open, Close, SaDump };

const char *astKindName(AstKind kind);
const char *binaryOpSpelling(BinaryOpKind op);
const char *unaryOpSpelling(UnaryOpKind op);
const char *assignOpSpelling(AssignOpKind op);

/// Semantic type attached to expressions and declarations.
struct SemaType {
  enum class Kind { Int, IntArray, RefInt, Void };
  Kind kind = Kind::Int;
  std::int64_t arrayLen = 0; // IntArray only

  static SemaType intTy() { return {Kind::Int, 0}; }
  static SemaType voidTy() { return {Kind::Void, 0}; }
  static SemaType refIntTy() { return {Kind::RefInt, 0}; }
  static SemaType arrayTy(std::int64_t len) { return {Kind::IntArray, len}; }

  bool isInt() const { return kind == Kind::Int; }
  bool isArray() const { return kind == Kind::IntArray; }
  bool isRef() const { return kind == Kind::RefInt; }
  bool isVoid() const { return kind == Kind::Void; }
  bool operator==(const SemaType &o) const {
    return kind == o.kind && arrayLen == o.arrayLen;
  }
  std::string str() const;
};

struct AstNode {
  int id = 0;
  AstKind kind = AstKind::Program;
  SourceLocation loc;
  std::vector<AstNode *> children;

  std::string name;          // decls, VarRef, Call (callee)
  std::int64_t intValue = 0; // IntLit
  BinaryOpKind binaryOp = BinaryOpKind::Add;
  UnaryOpKind unaryOp = UnaryOpKind::Neg;
  AssignOpKind assignOp = AssignOpKind::Assign;
  bool byRef = false;                   // ParamDecl
  bool returnsValue = false;            // FunctionDecl: int vs void
  bool hasBody = false;                 // FunctionDecl: prototype if false
  std::optional<std::int64_t> arrayLen; // VarDecl
  bool forHasInit = false, forHasCond = false, forHasStep = false;
  SourceLocation endLoc; // FunctionDecl: closing brace of the body

  // Filled by semantic analysis.
  std::optional<SemaType> type;
  const AstNode *decl = nullptr; // VarRef -> VarDecl/ParamDecl, Call -> FunctionDecl
  Intrinsic intrinsic = Intrinsic::None;

  bool isExpr() const {
    switch (kind) {
    case AstKind::IntLit:
    case AstKind::VarRef:
    case AstKind::ArrayIndex:
    case AstKind::UnaryOp:
    case AstKind::BinaryOp:
    case AstKind::Call:
      return true;
    default:
      return false;
    }
  }

  // Structured accessors. They assume the child layout documented above.
  AstNode *body() const {
    switch (kind) {
    case AstKind::FunctionDecl:
      return hasBody ? children.back() : nullptr;
    case AstKind::WhileStmt:
      return children[1];
    case AstKind::ForStmt:
      return children.back();
    default:
      return nullptr;
    }
  }
  AstNode *cond() const {
    switch (kind) {
    case AstKind::IfStmt:
    case AstKind::WhileStmt:
      return children[0];
    case AstKind::ForStmt:
      return forHasCond ? children[forHasInit ? 1 : 0] : nullptr;
    default:
      return nullptr;
    }
  }
  AstNode *thenStmt() const { return children[1]; }
  AstNode *elseStmt() const {
    return children.size() > 2 ? children[2] : nullptr;
  }
  AstNode *forInit() const { return forHasInit ? children[0] : nullptr; }
  AstNode *forStep() const {
    if (!forHasStep)
      return nullptr;
    return children[(forHasInit ? 1 : 0) + (forHasCond ? 1 : 0)];
  }
  std::vector<AstNode *> params() const {
    std::vector<AstNode *> out;
    for (AstNode *c : children)
      if (c->kind == AstKind::ParamDecl)
        out.push_back(c);
    return out;
  }
  AstNode *varInit() const {
    return children.empty() ? nullptr : children[0];
  }
  AstNode *assignLhs() const { return children[0]; }
  AstNode *assignRhs() const { return children[1]; }
  AstNode *lhs() const { return children[0]; }
  AstNode *rhs() const { return children[1]; }
  AstNode *operand() const { return children[0]; }
  AstNode *indexBase() const { return children[0]; }
  AstNode *indexExpr() const { return children[1]; }
};

/// Owns every node of a translation unit and hands out ids that stay unique
/// across desugaring and CFG construction.
class AstContext {
public:
  AstNode *create(AstKind kind, SourceLocation loc) {
    nodes_.emplace_back();
    AstNode &n = nodes_.back();
    n.id = nextId_++;
    n.kind = kind;
    n.loc = std::move(loc);
    return &n;
  }

  /// Deep copy of a subtree; fresh ids, payload and bindings preserved.
  AstNode *clone(const AstNode *node);

  int nodeCount() const { return nextId_; }

private:
  std::deque<AstNode> nodes_; // deque: stable addresses
  int nextId_ = 0;
};

/// Pre-order walk over a subtree.
void walkPreOrder(const AstNode *root,
                  const std::function<void(const AstNode *)> &visit);

/// Structural equality: kinds, payloads, and children; ids, locations, and
/// semantic annotations are ignored.
bool structurallyEqual(const AstNode *a, const AstNode *b);

} // namespace minisa
