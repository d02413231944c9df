//===--- Desugar.cpp - Lowering to the MiniC core language ------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Desugar.hpp"

#include "minisa/Sema.hpp"

#include <cassert>
#include <set>
#include <string>

namespace minisa {

namespace {

class Desugarer {
public:
  Desugarer(AstContext &ctx, const AstNode *program) : ctx_(ctx) {
    walkPreOrder(program, [this](const AstNode *n) {
      if (!n->name.empty())
        usedNames_.insert(n->name);
    });
  }

  void run(AstNode *program) {
    for (AstNode *fn : program->children)
      if (fn->hasBody)
        rewriteChildrenOf(fn);
  }

private:
  AstContext &ctx_;
  std::set<std::string> usedNames_;
  int nextTemp_ = 0;

  std::string freshName() {
    std::string name;
    do {
      name = "__t" + std::to_string(nextTemp_++);
    } while (usedNames_.count(name));
    usedNames_.insert(name);
    return name;
  }

  void rewriteChildrenOf(AstNode *parent) {
    for (AstNode *&slot : parent->children) {
      slot = rewriteStmt(slot);
      rewriteChildrenOf(slot);
    }
  }

  AstNode *rewriteStmt(AstNode *stmt) {
    switch (stmt->kind) {
    case AstKind::ForStmt:
      return rewriteFor(stmt);
    case AstKind::AssignStmt:
      if (stmt->assignOp != AssignOpKind::Assign)
        return rewriteCompound(stmt);
      return stmt;
    default:
      return stmt;
    }
  }

  AstNode *rewriteFor(AstNode *forStmt) {
    AstNode *whileStmt = ctx_.create(AstKind::WhileStmt, forStmt->loc);
    AstNode *cond = forStmt->cond();
    if (!cond) {
      cond = ctx_.create(AstKind::IntLit, forStmt->loc);
      cond->intValue = 1;
    }
    AstNode *newBody = ctx_.create(AstKind::Block, forStmt->body()->loc);
    newBody->children.push_back(forStmt->body());
    if (AstNode *step = forStmt->forStep())
      newBody->children.push_back(step);
    whileStmt->children = {cond, newBody};

    AstNode *wrapper = ctx_.create(AstKind::Block, forStmt->loc);
    if (AstNode *init = forStmt->forInit())
      wrapper->children.push_back(init);
    wrapper->children.push_back(whileStmt);
    return wrapper;
  }

  static BinaryOpKind binOpFor(AssignOpKind op) {
    switch (op) {
    case AssignOpKind::AddAssign:
      return BinaryOpKind::Add;
    case AssignOpKind::SubAssign:
      return BinaryOpKind::Sub;
    case AssignOpKind::MulAssign:
      return BinaryOpKind::Mul;
    case AssignOpKind::DivAssign:
      return BinaryOpKind::Div;
    case AssignOpKind::Assign:
      break;
    }
    assert(false && "plain assignment has no operator");
    return BinaryOpKind::Add;
  }

  AstNode *rewriteCompound(AstNode *stmt) {
    AstNode *lhs = stmt->assignLhs();
    AstNode *rhs = stmt->assignRhs();
    BinaryOpKind op = binOpFor(stmt->assignOp);

    if (lhs->kind == AstKind::VarRef) {
      AstNode *read = ctx_.clone(lhs);
      AstNode *combined = ctx_.create(AstKind::BinaryOp, stmt->loc);
      combined->binaryOp = op;
      combined->children = {read, rhs};
      stmt->assignOp = AssignOpKind::Assign;
      stmt->children = {lhs, combined};
      return stmt;
    }

    // a[i] op= e: evaluate the index once into a temporary.
    assert(lhs->kind == AstKind::ArrayIndex);
    AstNode *temp = ctx_.create(AstKind::VarDecl, stmt->loc);
    temp->name = freshName();
    temp->children.push_back(lhs->indexExpr());

    AstNode *tempRefL = ctx_.create(AstKind::VarRef, stmt->loc);
    tempRefL->name = temp->name;
    lhs->children[1] = tempRefL;

    AstNode *readElem = ctx_.clone(lhs);
    AstNode *combined = ctx_.create(AstKind::BinaryOp, stmt->loc);
    combined->binaryOp = op;
    combined->children = {readElem, rhs};

    stmt->assignOp = AssignOpKind::Assign;
    stmt->children = {lhs, combined};

    AstNode *wrapper = ctx_.create(AstKind::Block, stmt->loc);
    wrapper->children = {temp, stmt};
    return wrapper;
  }
};

} // namespace

AstNode *desugar(AstNode *program, AstContext &ctx) {
  Desugarer(ctx, program).run(program);
  analyzeSemantics(program); // the core form must type-check again
  return program;
}

} // namespace minisa
