//===--- Ast.cpp - MiniC abstract syntax tree -------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Ast.hpp"

namespace minisa {

const char *astKindName(AstKind kind) {
  switch (kind) {
  case AstKind::Program:
    return "Program";
  case AstKind::FunctionDecl:
    return "FunctionDecl";
  case AstKind::ParamDecl:
    return "ParamDecl";
  case AstKind::VarDecl:
    return "VarDecl";
  case AstKind::Block:
    return "Block";
  case AstKind::IfStmt:
    return "IfStmt";
  case AstKind::WhileStmt:
    return "WhileStmt";
  case AstKind::ForStmt:
    return "ForStmt";
  case AstKind::ReturnStmt:
    return "ReturnStmt";
  case AstKind::ExprStmt:
    return "ExprStmt";
  case AstKind::AssignStmt:
    return "AssignStmt";
  case AstKind::EmptyStmt:
    return "EmptyStmt";
  case AstKind::IntLit:
    return "IntLit";
  case AstKind::VarRef:
    return "VarRef";
  case AstKind::ArrayIndex:
    return "ArrayIndex";
  case AstKind::UnaryOp:
    return "UnaryOp";
  case AstKind::BinaryOp:
    return "BinaryOp";
  case AstKind::Call:
    return "Call";
  }
  return "Unknown";
}

const char *binaryOpSpelling(BinaryOpKind op) {
  switch (op) {
  case BinaryOpKind::Add:
    return "+";
  case BinaryOpKind::Sub:
    return "-";
  case BinaryOpKind::Mul:
    return "*";
  case BinaryOpKind::Div:
    return "/";
  case BinaryOpKind::Rem:
    return "%";
  case BinaryOpKind::Lt:
    return "<";
  case BinaryOpKind::Le:
    return "<=";
  case BinaryOpKind::Gt:
    return ">";
  case BinaryOpKind::Ge:
    return ">=";
  case BinaryOpKind::Eq:
    return "==";
  case BinaryOpKind::Ne:
    return "!=";
  case BinaryOpKind::LogicalAnd:
    return "&&";
  case BinaryOpKind::LogicalOr:
    return "||";
  }
  return "?";
}

const char *unaryOpSpelling(UnaryOpKind op) {
  return op == UnaryOpKind::Neg ? "-" : "!";
}

const char *assignOpSpelling(AssignOpKind op) {
  switch (op) {
  case AssignOpKind::Assign:
    return "=";
  case AssignOpKind::AddAssign:
    return "+=";
  case AssignOpKind::SubAssign:
    return "-=";
  case AssignOpKind::MulAssign:
    return "*=";
  case AssignOpKind::DivAssign:
    return "/=";
  }
  return "?";
}

std::string SemaType::str() const {
  switch (kind) {
  case Kind::Int:
    return "int";
  case Kind::IntArray:
    return "int[" + std::to_string(arrayLen) + "]";
  case Kind::RefInt:
    return "int&";
  case Kind::Void:
    return "void";
  }
  return "?";
}

AstNode *AstContext::clone(const AstNode *node) {
  AstNode *copy = create(node->kind, node->loc);
  int id = copy->id;
  *copy = *node;
  copy->id = id;
  copy->children.clear();
  for (const AstNode *child : node->children)
    copy->children.push_back(clone(child));
  return copy;
}

void walkPreOrder(const AstNode *root,
                  const std::function<void(const AstNode *)> &visit) {
  visit(root);
  for (const AstNode *child : root->children)
    walkPreOrder(child, visit);
}

bool structurallyEqual(const AstNode *a, const AstNode *b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind)
    return false;
  if (a->name != b->name || a->intValue != b->intValue)
    return false;
  switch (a->kind) {
  case AstKind::BinaryOp:
    if (a->binaryOp != b->binaryOp)
      return false;
    break;
  case AstKind::UnaryOp:
    if (a->unaryOp != b->unaryOp)
      return false;
    break;
  case AstKind::AssignStmt:
    if (a->assignOp != b->assignOp)
      return false;
    break;
  case AstKind::ParamDecl:
    if (a->byRef != b->byRef)
      return false;
    break;
  case AstKind::FunctionDecl:
    if (a->returnsValue != b->returnsValue || a->hasBody != b->hasBody)
      return false;
    break;
  case AstKind::VarDecl:
    if (a->arrayLen != b->arrayLen)
      return false;
    break;
  case AstKind::ForStmt:
    if (a->forHasInit != b->forHasInit || a->forHasCond != b->forHasCond ||
        a->forHasStep != b->forHasStep)
      return false;
    break;
  default:
    break;
  }
  if (a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurallyEqual(a->children[i], b->children[i]))
      return false;
  return true;
}

} // namespace minisa
