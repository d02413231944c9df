//===--- Cfg.cpp - Control flow graphs of basic blocks ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Cfg.hpp"

#include "json.hpp"

#include <cassert>
#include <functional>

namespace minisa {

namespace {

bool isLogical(const AstNode *expr) {
  return expr->kind == AstKind::BinaryOp &&
         (expr->binaryOp == BinaryOpKind::LogicalAnd ||
          expr->binaryOp == BinaryOpKind::LogicalOr);
}

bool containsLogical(const AstNode *expr) {
  if (isLogical(expr))
    return true;
  for (const AstNode *child : expr->children)
    if (child->isExpr() && containsLogical(child))
      return true;
  return false;
}

class CfgBuilder {
public:
  CfgBuilder(const AstNode *fn, AstContext &ctx) : ctx_(ctx) {
    cfg_.function = fn;
  }

  Cfg build() {
    const AstNode *fn = cfg_.function;
    assert(fn->hasBody && "cannot build a CFG for a prototype");
    for (const AstNode *param : fn->params())
      cfg_.locals.push_back(param);

    cfg_.entry = newBlock();
    cur_ = cfg_.entry;
    visitStmt(fn->body());
    if (!terminated_)
      setReturn(nullptr);

    cfg_.exit = newBlock();
    cfg_.blocks[cfg_.exit].term.kind = Terminator::Kind::Exit;
    finalize();
    return std::move(cfg_);
  }

private:
  AstContext &ctx_;
  Cfg cfg_;
  int cur_ = 0;
  bool terminated_ = false;
  int nextTemp_ = 0;

  int newBlock() {
    int id = static_cast<int>(cfg_.blocks.size());
    cfg_.blocks.emplace_back();
    cfg_.blocks.back().id = id;
    return id;
  }

  void startBlock(int id) {
    cur_ = id;
    terminated_ = false;
  }

  void append(const AstNode *element) {
    cfg_.blocks[cur_].elements.push_back(element);
    if (element->kind == AstKind::VarDecl)
      cfg_.locals.push_back(element);
  }

  void setJump(int target) {
    Terminator &t = cfg_.blocks[cur_].term;
    t.kind = Terminator::Kind::Jump;
    t.target = target;
    terminated_ = true;
  }

  void setCondBranch(const AstNode *cond, int trueTarget, int falseTarget) {
    Terminator &t = cfg_.blocks[cur_].term;
    t.kind = Terminator::Kind::CondBranch;
    t.cond = cond;
    t.trueTarget = trueTarget;
    t.falseTarget = falseTarget;
    terminated_ = true;
  }

  void setReturn(const AstNode *expr) {
    Terminator &t = cfg_.blocks[cur_].term;
    t.kind = Terminator::Kind::Return;
    t.returnExpr = expr;
    terminated_ = true;
  }

  void visitStmt(const AstNode *stmt) {
    switch (stmt->kind) {
    case AstKind::Block:
      for (const AstNode *child : stmt->children)
        visitStmt(child);
      break;
    case AstKind::EmptyStmt:
      break;
    case AstKind::VarDecl:
    case AstKind::AssignStmt:
    case AstKind::ExprStmt:
      assert(stmt->kind != AstKind::AssignStmt ||
             stmt->assignOp == AssignOpKind::Assign);
      appendElement(stmt);
      break;
    case AstKind::IfStmt:
      visitIf(stmt);
      break;
    case AstKind::WhileStmt:
      visitWhile(stmt);
      break;
    case AstKind::ReturnStmt: {
      const AstNode *expr =
          stmt->children.empty() ? nullptr : stmt->children[0];
      if (expr && containsLogical(expr)) {
        AstNode *lowered = ctx_.clone(expr);
        lowered = lowerValueLogicals(lowered);
        expr = lowered;
      }
      setReturn(expr);
      // Anything that follows is unreachable but still gets blocks.
      startBlock(newBlock());
      break;
    }
    case AstKind::ForStmt:
      assert(false && "for statements must be desugared first");
      break;
    default:
      assert(false && "not a statement");
    }
  }

  void appendElement(const AstNode *stmt) {
    bool needsLowering = false;
    for (const AstNode *child : stmt->children)
      if (child->isExpr() && containsLogical(child))
        needsLowering = true;
    if (!needsLowering) {
      append(stmt);
      return;
    }
    AstNode *copy = ctx_.clone(stmt);
    for (AstNode *&slot : copy->children)
      if (slot->isExpr())
        slot = lowerValueLogicals(slot);
    append(copy);
  }

  /// Replaces every `&&`/`||` inside `expr` (value position) by a read of a
  /// fresh temporary computed through branch structure emitted here.
  AstNode *lowerValueLogicals(AstNode *expr) {
    if (isLogical(expr)) {
      AstNode *temp = makeTemp(expr->loc);
      int thenB = newBlock();
      int elseB = newBlock();
      int joinB = newBlock();
      emitCond(expr, thenB, elseB);
      startBlock(thenB);
      append(makeFlagAssign(temp, 1, expr->loc));
      setJump(joinB);
      startBlock(elseB);
      append(makeFlagAssign(temp, 0, expr->loc));
      setJump(joinB);
      startBlock(joinB);
      return makeTempRead(temp, expr->loc);
    }
    for (AstNode *&slot : expr->children)
      if (slot->isExpr())
        slot = lowerValueLogicals(slot);
    return expr;
  }

  AstNode *makeTemp(const SourceLocation &loc) {
    AstNode *decl = ctx_.create(AstKind::VarDecl, loc);
    decl->name = "__cc" + std::to_string(nextTemp_++);
    decl->type = SemaType::intTy();
    append(decl);
    return decl;
  }

  AstNode *makeTempRead(const AstNode *decl, const SourceLocation &loc) {
    AstNode *ref = ctx_.create(AstKind::VarRef, loc);
    ref->name = decl->name;
    ref->decl = decl;
    ref->type = SemaType::intTy();
    return ref;
  }

  AstNode *makeFlagAssign(const AstNode *decl, std::int64_t value,
                          const SourceLocation &loc) {
    AstNode *assign = ctx_.create(AstKind::AssignStmt, loc);
    AstNode *lit = ctx_.create(AstKind::IntLit, loc);
    lit->intValue = value;
    lit->type = SemaType::intTy();
    assign->children = {makeTempRead(decl, loc), lit};
    return assign;
  }

  /// Short-circuit lowering of a condition toward (trueTarget, falseTarget).
  /// `!` swaps the targets instead of emitting a negation element.
  void emitCond(const AstNode *cond, int trueTarget, int falseTarget) {
    if (cond->kind == AstKind::UnaryOp &&
        cond->unaryOp == UnaryOpKind::LogicalNot) {
      emitCond(cond->operand(), falseTarget, trueTarget);
      return;
    }
    if (isLogical(cond)) {
      int rhsB = newBlock();
      if (cond->binaryOp == BinaryOpKind::LogicalAnd)
        emitCond(cond->lhs(), rhsB, falseTarget);
      else
        emitCond(cond->lhs(), trueTarget, rhsB);
      startBlock(rhsB);
      emitCond(cond->rhs(), trueTarget, falseTarget);
      return;
    }
    const AstNode *leaf = cond;
    if (containsLogical(leaf)) {
      AstNode *copy = ctx_.clone(leaf);
      leaf = lowerValueLogicals(copy);
    }
    setCondBranch(leaf, trueTarget, falseTarget);
  }

  void visitIf(const AstNode *stmt) {
    int thenB = newBlock();
    int elseB = stmt->elseStmt() ? newBlock() : -1;
    int joinB = newBlock();
    emitCond(stmt->cond(), thenB, elseB >= 0 ? elseB : joinB);
    startBlock(thenB);
    visitStmt(stmt->thenStmt());
    if (!terminated_)
      setJump(joinB);
    if (elseB >= 0) {
      startBlock(elseB);
      visitStmt(stmt->elseStmt());
      if (!terminated_)
        setJump(joinB);
    }
    startBlock(joinB);
  }

  void visitWhile(const AstNode *stmt) {
    int headerB = newBlock();
    setJump(headerB);
    int bodyB = newBlock();
    int afterB = newBlock();
    startBlock(headerB);
    emitCond(stmt->cond(), bodyB, afterB);
    startBlock(bodyB);
    visitStmt(stmt->body());
    if (!terminated_)
      setJump(headerB);
    startBlock(afterB);
  }

  void finalize() {
    deriveEdges();
    computeRpo();
    recordOwners();
  }

  void deriveEdges() {
    for (BasicBlock &b : cfg_.blocks) {
      switch (b.term.kind) {
      case Terminator::Kind::Jump:
        b.succs = {b.term.target};
        break;
      case Terminator::Kind::CondBranch:
        b.succs = {b.term.trueTarget, b.term.falseTarget};
        break;
      case Terminator::Kind::Return:
        b.succs = {cfg_.exit};
        break;
      case Terminator::Kind::Exit:
        break;
      }
      for (int s : b.succs)
        cfg_.blocks[s].preds.push_back(b.id);
    }
  }

  void computeRpo() {
    std::vector<int> postOrder;
    std::vector<bool> seen(cfg_.blocks.size(), false);
    std::function<void(int)> dfs = [&](int id) {
      seen[id] = true;
      for (int s : cfg_.blocks[id].succs)
        if (!seen[s])
          dfs(s);
      postOrder.push_back(id);
    };
    dfs(cfg_.entry);
    cfg_.rpo.assign(postOrder.rbegin(), postOrder.rend());
    for (std::size_t i = 0; i < cfg_.rpo.size(); ++i) {
      BasicBlock &b = cfg_.blocks[cfg_.rpo[i]];
      b.rpoIndex = static_cast<int>(i);
      b.reachable = true;
    }
  }

  void recordOwners() {
    auto claim = [this](const AstNode *root, CfgOwner owner) {
      walkPreOrder(root, [this, &owner](const AstNode *n) {
        cfg_.exprOwner[n->id] = owner;
      });
    };
    for (const BasicBlock &b : cfg_.blocks) {
      for (std::size_t i = 0; i < b.elements.size(); ++i)
        claim(b.elements[i], {b.id, static_cast<int>(i), false});
      if (b.term.cond)
        claim(b.term.cond, {b.id, -1, true});
      if (b.term.returnExpr)
        claim(b.term.returnExpr, {b.id, -1, true});
    }
  }
};

} // namespace

Cfg buildCfg(const AstNode *function, AstContext &ctx) {
  return CfgBuilder(function, ctx).build();
}

std::string dumpCfgJson(const std::vector<Cfg> &cfgs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Cfg &cfg : cfgs) {
    nlohmann::ordered_json fn;
    fn["function"] = cfg.function->name;
    fn["entry"] = cfg.entry;
    fn["exit"] = cfg.exit;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const BasicBlock &b : cfg.blocks) {
      nlohmann::ordered_json jb;
      jb["id"] = b.id;
      nlohmann::ordered_json elems = nlohmann::ordered_json::array();
      for (const AstNode *e : b.elements)
        elems.push_back(e->id);
      jb["elements"] = std::move(elems);
      nlohmann::ordered_json term;
      switch (b.term.kind) {
      case Terminator::Kind::Jump:
        term["kind"] = "Jump";
        term["targets"] = {b.term.target};
        break;
      case Terminator::Kind::CondBranch:
        term["kind"] = "CondBranch";
        term["targets"] = {b.term.trueTarget, b.term.falseTarget};
        term["cond"] = b.term.cond->id;
        break;
      case Terminator::Kind::Return:
        term["kind"] = "Return";
        term["targets"] = {cfg.exit};
        if (b.term.returnExpr)
          term["expr"] = b.term.returnExpr->id;
        break;
      case Terminator::Kind::Exit:
        term["kind"] = "Exit";
        term["targets"] = nlohmann::ordered_json::array();
        break;
      }
      jb["term"] = std::move(term);
      jb["reachable"] = b.reachable;
      blocks.push_back(std::move(jb));
    }
    fn["blocks"] = std::move(blocks);
    out.push_back(std::move(fn));
  }
  return out.dump(2) + "\n";
}

} // namespace minisa
