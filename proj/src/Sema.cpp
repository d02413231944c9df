//===--- Sema.cpp - Type and scope checking for MiniC -----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Sema.hpp"

#include "minisa/Diagnostics.hpp"

#include <cassert>

namespace minisa {

Intrinsic intrinsicByName(const std::string &name) {
  if (name == "input")
    return Intrinsic::Input;
  if (name == "open")
    return Intrinsic::Open;
  if (name == "close")
    return Intrinsic::Close;
  if (name == "sa_dump")
    return Intrinsic::SaDump;
  return Intrinsic::None;
}

namespace {

class Sema {
public:
  void run(AstNode *program) {
    collectFunctions(program);
    for (AstNode *fn : program->children)
      if (fn->hasBody)
        checkFunction(fn);
  }

private:
  std::map<std::string, AstNode *> functions_;
  std::vector<std::vector<SymbolTableEntry>> scopes_;
  AstNode *currentFn_ = nullptr;

  [[noreturn]] static void fail(ErrorKind kind, const AstNode *node,
                                const std::string &message) {
    throw FrontendError(kind, node->loc, message);
  }

  void collectFunctions(AstNode *program) {
    for (AstNode *fn : program->children) {
      assert(fn->kind == AstKind::FunctionDecl);
      if (intrinsicByName(fn->name) != Intrinsic::None)
        fail(ErrorKind::Redefinition, fn,
             "'" + fn->name + "' is an intrinsic function");
      if (!functions_.emplace(fn->name, fn).second)
        fail(ErrorKind::Redefinition, fn,
             "redefinition of function '" + fn->name + "'");
      fn->type = fn->returnsValue ? SemaType::intTy() : SemaType::voidTy();
    }
  }

  void checkFunction(AstNode *fn) {
    currentFn_ = fn;
    scopes_.clear();
    scopes_.emplace_back();
    for (AstNode *param : fn->params()) {
      param->type = param->byRef ? SemaType::refIntTy() : SemaType::intTy();
      declare(param);
    }
    checkBlock(fn->body());
    scopes_.pop_back();
  }

  void declare(AstNode *decl) {
    int depth = static_cast<int>(scopes_.size()) - 1;
    for (const SymbolTableEntry &entry : scopes_.back())
      if (entry.name == decl->name)
        fail(ErrorKind::Redefinition, decl,
             "redefinition of '" + decl->name + "' in the same scope");
    scopes_.back().push_back({decl->name, decl, *decl->type, depth});
  }

  const SymbolTableEntry *lookup(const std::string &name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope)
      for (auto entry = scope->rbegin(); entry != scope->rend(); ++entry)
        if (entry->name == name)
          return &*entry;
    return nullptr;
  }

  void checkBlock(AstNode *block) {
    scopes_.emplace_back();
    for (AstNode *stmt : block->children)
      checkStmt(stmt);
    scopes_.pop_back();
  }

  void checkStmt(AstNode *stmt) {
    switch (stmt->kind) {
    case AstKind::VarDecl:
      checkVarDecl(stmt);
      break;
    case AstKind::Block:
      checkBlock(stmt);
      break;
    case AstKind::IfStmt:
      checkCondition(stmt->cond());
      checkStmt(stmt->thenStmt());
      if (stmt->elseStmt())
        checkStmt(stmt->elseStmt());
      break;
    case AstKind::WhileStmt:
      checkCondition(stmt->cond());
      checkStmt(stmt->body());
      break;
    case AstKind::ForStmt:
      if (stmt->forInit())
        checkStmt(stmt->forInit());
      if (stmt->cond())
        checkCondition(stmt->cond());
      if (stmt->forStep())
        checkStmt(stmt->forStep());
      checkStmt(stmt->body());
      break;
    case AstKind::ReturnStmt:
      checkReturn(stmt);
      break;
    case AstKind::ExprStmt:
      checkCall(stmt->children[0]);
      break;
    case AstKind::AssignStmt:
      checkAssign(stmt);
      break;
    case AstKind::EmptyStmt:
      break;
    default:
      assert(false && "not a statement");
    }
  }

  void checkVarDecl(AstNode *decl) {
    if (decl->arrayLen) {
      if (*decl->arrayLen <= 0)
        fail(ErrorKind::TypeMismatch, decl,
             "array length must be positive");
      decl->type = SemaType::arrayTy(*decl->arrayLen);
      if (decl->varInit())
        fail(ErrorKind::TypeMismatch, decl,
             "array '" + decl->name + "' cannot have a scalar initializer");
    } else {
      decl->type = SemaType::intTy();
    }
    // C scoping: the name is visible inside its own initializer.
    declare(decl);
    if (AstNode *init = decl->varInit())
      checkIntExpr(init);
  }

  void checkCondition(AstNode *expr) {
    checkIntExpr(expr);
  }

  void checkReturn(AstNode *stmt) {
    if (stmt->children.empty()) {
      if (currentFn_->returnsValue)
        fail(ErrorKind::TypeMismatch, stmt,
             "non-void function '" + currentFn_->name +
                 "' must return a value");
      return;
    }
    if (!currentFn_->returnsValue)
      fail(ErrorKind::TypeMismatch, stmt,
           "void function '" + currentFn_->name + "' cannot return a value");
    checkIntExpr(stmt->children[0]);
  }

  void checkAssign(AstNode *stmt) {
    checkLvalue(stmt->assignLhs());
    checkIntExpr(stmt->assignRhs());
  }

  // An lvalue is an int variable, a by-reference parameter, or an element
  // of a local array. Its type as an expression is always Int.
  void checkLvalue(AstNode *expr) {
    if (expr->kind == AstKind::VarRef) {
      bindVar(expr);
      const SemaType &ty = *expr->decl->type;
      if (ty.isArray())
        fail(ErrorKind::TypeMismatch, expr,
             "array '" + expr->name + "' is not assignable as a whole");
      expr->type = SemaType::intTy();
      return;
    }
    if (expr->kind == AstKind::ArrayIndex) {
      checkArrayIndex(expr);
      return;
    }
    fail(ErrorKind::TypeMismatch, expr, "expression is not an lvalue");
  }

  void bindVar(AstNode *ref) {
    const SymbolTableEntry *entry = lookup(ref->name);
    if (!entry)
      fail(ErrorKind::UndeclaredIdentifier, ref,
           "use of undeclared identifier '" + ref->name + "'");
    ref->decl = entry->declNode;
  }

  void checkArrayIndex(AstNode *expr) {
    AstNode *base = expr->indexBase();
    bindVar(base);
    base->type = *base->decl->type;
    if (!base->type->isArray())
      fail(ErrorKind::IndexOfNonArray, base,
           "'" + base->name + "' is not an array");
    checkIntExpr(expr->indexExpr());
    expr->type = SemaType::intTy();
  }

  void checkIntExpr(AstNode *expr) {
    SemaType ty = typeOf(expr);
    if (!ty.isInt())
      fail(ErrorKind::TypeMismatch, expr,
           "expected an int value, got " + ty.str());
  }

  SemaType typeOf(AstNode *expr) {
    switch (expr->kind) {
    case AstKind::IntLit:
      expr->type = SemaType::intTy();
      break;
    case AstKind::VarRef: {
      bindVar(expr);
      const SemaType &declTy = *expr->decl->type;
      if (declTy.isArray())
        fail(ErrorKind::TypeMismatch, expr,
             "array '" + expr->name + "' cannot be used as a value");
      // Reference parameters read as plain ints.
      expr->type = SemaType::intTy();
      break;
    }
    case AstKind::ArrayIndex:
      checkArrayIndex(expr);
      break;
    case AstKind::UnaryOp:
      checkIntExpr(expr->operand());
      expr->type = SemaType::intTy();
      break;
    case AstKind::BinaryOp:
      checkIntExpr(expr->lhs());
      checkIntExpr(expr->rhs());
      expr->type = SemaType::intTy();
      break;
    case AstKind::Call:
      checkCall(expr);
      break;
    default:
      assert(false && "not an expression");
    }
    return *expr->type;
  }

  void checkCall(AstNode *call) {
    Intrinsic intr = intrinsicByName(call->name);
    if (intr != Intrinsic::None) {
      call->intrinsic = intr;
      checkIntrinsicCall(call, intr);
      return;
    }
    auto it = functions_.find(call->name);
    if (it == functions_.end())
      fail(ErrorKind::UndeclaredIdentifier, call,
           "call to undeclared function '" + call->name + "'");
    AstNode *fn = it->second;
    call->decl = fn;
    std::vector<AstNode *> params = fn->params();
    if (params.size() != call->children.size())
      fail(ErrorKind::ArityMismatch, call,
           "'" + call->name + "' expects " + std::to_string(params.size()) +
               " argument(s), got " + std::to_string(call->children.size()));
    for (std::size_t i = 0; i < params.size(); ++i) {
      AstNode *arg = call->children[i];
      if (params[i]->byRef) {
        if (arg->kind != AstKind::VarRef && arg->kind != AstKind::ArrayIndex)
          fail(ErrorKind::NonLvalueRefArgument, arg,
               "by-reference argument must be an lvalue");
        checkLvalue(arg);
      } else {
        checkIntExpr(arg);
      }
    }
    call->type = fn->returnsValue ? SemaType::intTy() : SemaType::voidTy();
  }

  void checkIntrinsicCall(AstNode *call, Intrinsic intr) {
    std::size_t expected = (intr == Intrinsic::Input || intr == Intrinsic::Open)
                               ? 0
                               : 1;
    if (call->children.size() != expected)
      fail(ErrorKind::ArityMismatch, call,
           "'" + call->name + "' expects " + std::to_string(expected) +
               " argument(s), got " + std::to_string(call->children.size()));
    for (AstNode *arg : call->children)
      checkIntExpr(arg);
    switch (intr) {
    case Intrinsic::Input:
    case Intrinsic::Open:
      call->type = SemaType::intTy();
      break;
    case Intrinsic::Close:
    case Intrinsic::SaDump:
      call->type = SemaType::voidTy();
      break;
    default:
      break;
    }
  }
};

} // namespace

void analyzeSemantics(AstNode *program) {
  Sema().run(program);
}

} // namespace minisa
