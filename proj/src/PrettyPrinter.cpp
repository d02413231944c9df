//===--- PrettyPrinter.cpp - Canonical MiniC source printer -----*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/PrettyPrinter.hpp"

#include <cassert>
#include <sstream>

namespace minisa {

namespace {

int precedenceOf(const AstNode *expr) {
  if (expr->kind == AstKind::UnaryOp)
    return 7;
  if (expr->kind != AstKind::BinaryOp)
    return 8; // primary
  switch (expr->binaryOp) {
  case BinaryOpKind::LogicalOr:
    return 1;
  case BinaryOpKind::LogicalAnd:
    return 2;
  case BinaryOpKind::Eq:
  case BinaryOpKind::Ne:
    return 3;
  case BinaryOpKind::Lt:
  case BinaryOpKind::Le:
  case BinaryOpKind::Gt:
  case BinaryOpKind::Ge:
    return 4;
  case BinaryOpKind::Add:
  case BinaryOpKind::Sub:
    return 5;
  case BinaryOpKind::Mul:
  case BinaryOpKind::Div:
  case BinaryOpKind::Rem:
    return 6;
  }
  return 8;
}

class Printer {
public:
  std::string print(const AstNode *program) {
    for (std::size_t i = 0; i < program->children.size(); ++i) {
      if (i > 0)
        out_ << "\n";
      printFunction(program->children[i]);
    }
    return out_.str();
  }

  std::string exprText(const AstNode *expr) {
    printExprNode(expr, 0);
    return out_.str();
  }

private:
  std::ostringstream out_;
  int indent_ = 0;

  void line() { out_ << std::string(static_cast<std::size_t>(indent_) * 2, ' '); }

  void printFunction(const AstNode *fn) {
    out_ << (fn->returnsValue ? "int " : "void ") << fn->name << "(";
    std::vector<AstNode *> params = fn->params();
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0)
        out_ << ", ";
      out_ << "int " << (params[i]->byRef ? "&" : "") << params[i]->name;
    }
    out_ << ")";
    if (!fn->hasBody) {
      out_ << ";\n";
      return;
    }
    out_ << " ";
    printStmt(fn->body(), /*inline=*/true);
  }

  void printStmt(const AstNode *stmt, bool inlinePrefix = false) {
    if (!inlinePrefix)
      line();
    switch (stmt->kind) {
    case AstKind::Block:
      out_ << "{\n";
      ++indent_;
      for (const AstNode *child : stmt->children)
        printStmt(child);
      --indent_;
      line();
      out_ << "}\n";
      break;
    case AstKind::VarDecl:
      out_ << "int " << stmt->name;
      if (stmt->arrayLen)
        out_ << "[" << *stmt->arrayLen << "]";
      if (stmt->varInit()) {
        out_ << " = ";
        printExprNode(stmt->varInit(), 0);
      }
      out_ << ";\n";
      break;
    case AstKind::AssignStmt:
      printExprNode(stmt->assignLhs(), 0);
      out_ << " " << assignOpSpelling(stmt->assignOp) << " ";
      printExprNode(stmt->assignRhs(), 0);
      out_ << ";\n";
      break;
    case AstKind::ExprStmt:
      printExprNode(stmt->children[0], 0);
      out_ << ";\n";
      break;
    case AstKind::IfStmt:
      out_ << "if (";
      printExprNode(stmt->cond(), 0);
      out_ << ")\n";
      printIndented(stmt->thenStmt());
      if (stmt->elseStmt()) {
        line();
        out_ << "else\n";
        printIndented(stmt->elseStmt());
      }
      break;
    case AstKind::WhileStmt:
      out_ << "while (";
      printExprNode(stmt->cond(), 0);
      out_ << ")\n";
      printIndented(stmt->body());
      break;
    case AstKind::ForStmt:
      out_ << "for (";
      if (stmt->forInit())
        printAssignNoSemi(stmt->forInit());
      out_ << "; ";
      if (stmt->cond())
        printExprNode(stmt->cond(), 0);
      out_ << "; ";
      if (stmt->forStep())
        printAssignNoSemi(stmt->forStep());
      out_ << ")\n";
      printIndented(stmt->body());
      break;
    case AstKind::ReturnStmt:
      out_ << "return";
      if (!stmt->children.empty()) {
        out_ << " ";
        printExprNode(stmt->children[0], 0);
      }
      out_ << ";\n";
      break;
    case AstKind::EmptyStmt:
      out_ << ";\n";
      break;
    default:
      assert(false && "not a statement");
    }
  }

  void printIndented(const AstNode *stmt) {
    ++indent_;
    printStmt(stmt);
    --indent_;
  }

  void printAssignNoSemi(const AstNode *assign) {
    printExprNode(assign->assignLhs(), 0);
    out_ << " " << assignOpSpelling(assign->assignOp) << " ";
    printExprNode(assign->assignRhs(), 0);
  }

  void printExprNode(const AstNode *expr, int minPrec) {
    int prec = precedenceOf(expr);
    bool parens = prec < minPrec;
    if (parens)
      out_ << "(";
    switch (expr->kind) {
    case AstKind::IntLit:
      out_ << expr->intValue;
      break;
    case AstKind::VarRef:
      out_ << expr->name;
      break;
    case AstKind::ArrayIndex:
      printExprNode(expr->indexBase(), 8);
      out_ << "[";
      printExprNode(expr->indexExpr(), 0);
      out_ << "]";
      break;
    case AstKind::UnaryOp:
      out_ << unaryOpSpelling(expr->unaryOp);
      printExprNode(expr->operand(), 7);
      break;
    case AstKind::BinaryOp:
      // Left-associative: the right child needs strictly higher precedence.
      printExprNode(expr->lhs(), prec);
      out_ << " " << binaryOpSpelling(expr->binaryOp) << " ";
      printExprNode(expr->rhs(), prec + 1);
      break;
    case AstKind::Call:
      out_ << expr->name << "(";
      for (std::size_t i = 0; i < expr->children.size(); ++i) {
        if (i > 0)
          out_ << ", ";
        printExprNode(expr->children[i], 0);
      }
      out_ << ")";
      break;
    default:
      assert(false && "not an expression");
    }
    if (parens)
      out_ << ")";
  }
};

} // namespace

std::string prettyPrint(const AstNode *program) {
  return Printer().print(program);
}

std::string printExpr(const AstNode *expr) {
  return Printer().exprText(expr);
}

} // namespace minisa
