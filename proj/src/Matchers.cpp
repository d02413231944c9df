//===--- Matchers.cpp - Token and AST pattern matching ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Matchers.hpp"

namespace minisa {

bool TokenMatcher::matches(const Token &token) const {
  switch (kind) {
  case Kind::Exact:
    return token.text == text;
  case Kind::OfKind:
    return token.kind == tokenKind;
  case Kind::AnyOne:
    return true;
  }
  return false;
}

std::vector<TokenMatch> matchTokens(const TokenPattern &pattern,
                                    const TokenStream &tokens) {
  std::vector<TokenMatch> matches;
  if (pattern.empty())
    return matches;
  std::size_t i = 0;
  while (i + pattern.size() <= tokens.size()) {
    bool ok = true;
    for (std::size_t j = 0; j < pattern.size(); ++j)
      if (!pattern[j].matches(tokens[i + j])) {
        ok = false;
        break;
      }
    if (ok) {
      matches.push_back({i, pattern.size(), tokens[i].loc});
      i += pattern.size(); // matches never overlap
    } else {
      ++i;
    }
  }
  return matches;
}

//===----------------------------------------------------------------------===//
// AST matcher combinators
//===----------------------------------------------------------------------===//

AstMatcher kindIs(AstKind kind) {
  return AstMatcher([kind](const AstNode *n, Bindings &) {
    return n->kind == kind;
  });
}

AstMatcher binaryOp(BinaryOpKind op) {
  return AstMatcher([op](const AstNode *n, Bindings &) {
    return n->kind == AstKind::BinaryOp && n->binaryOp == op;
  });
}

AstMatcher intLit() {
  return AstMatcher(
      [](const AstNode *n, Bindings &) { return n->kind == AstKind::IntLit; });
}

AstMatcher intLit(std::int64_t value) {
  return AstMatcher([value](const AstNode *n, Bindings &) {
    return n->kind == AstKind::IntLit && n->intValue == value;
  });
}

AstMatcher varRefNamed() {
  return AstMatcher(
      [](const AstNode *n, Bindings &) { return n->kind == AstKind::VarRef; });
}

AstMatcher varRefNamed(std::string name) {
  return AstMatcher([name = std::move(name)](const AstNode *n, Bindings &) {
    return n->kind == AstKind::VarRef && n->name == name;
  });
}

AstMatcher hasChild(std::size_t index, AstMatcher inner) {
  return AstMatcher(
      [index, inner = std::move(inner)](const AstNode *n, Bindings &b) {
        return index < n->children.size() &&
               inner.matches(n->children[index], b);
      });
}

AstMatcher anyDescendant(AstMatcher inner) {
  return AstMatcher([inner = std::move(inner)](const AstNode *n, Bindings &b) {
    for (const AstNode *child : n->children) {
      bool found = false;
      walkPreOrder(child, [&](const AstNode *d) {
        if (!found && inner.matches(d, b))
          found = true;
      });
      if (found)
        return true;
    }
    return false;
  });
}

AstMatcher allOf(std::vector<AstMatcher> matchers) {
  return AstMatcher(
      [matchers = std::move(matchers)](const AstNode *n, Bindings &b) {
        for (const AstMatcher &m : matchers)
          if (!m.matches(n, b))
            return false;
        return true;
      });
}

AstMatcher bind(std::string label, AstMatcher inner) {
  return AstMatcher([label = std::move(label),
                     inner = std::move(inner)](const AstNode *n, Bindings &b) {
    if (!inner.matches(n, b))
      return false;
    b[label] = n;
    return true;
  });
}

std::vector<AstMatch> matchAst(const AstMatcher &matcher,
                               const AstNode *root) {
  std::vector<AstMatch> matches;
  walkPreOrder(root, [&](const AstNode *n) {
    Bindings bindings;
    if (matcher.matches(n, bindings))
      matches.push_back({n, std::move(bindings)});
  });
  return matches;
}

//===----------------------------------------------------------------------===//
// Style checks
//===----------------------------------------------------------------------===//

namespace {

/// Structural identity of two expressions, with variable references
/// compared by resolved declaration rather than by spelling. Calls never
/// compare equal (they may produce different values each time).
bool sameLvalueExpr(const AstNode *a, const AstNode *b) {
  if (a->kind != b->kind)
    return false;
  switch (a->kind) {
  case AstKind::VarRef:
    return a->decl && b->decl && a->decl == b->decl;
  case AstKind::IntLit:
    return a->intValue == b->intValue;
  case AstKind::BinaryOp:
    if (a->binaryOp != b->binaryOp)
      return false;
    break;
  case AstKind::UnaryOp:
    if (a->unaryOp != b->unaryOp)
      return false;
    break;
  case AstKind::ArrayIndex:
    break;
  case AstKind::Call:
    return false;
  default:
    return false;
  }
  if (a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!sameLvalueExpr(a->children[i], b->children[i]))
      return false;
  return true;
}

Report makeStyleReport(const std::string &checker, const std::string &message,
                       SourceLocation loc) {
  Report report;
  report.checker = checker;
  report.message = message;
  report.loc = std::move(loc);
  finalizeReport(report);
  return report;
}

} // namespace

std::vector<Report> styleChecks(const TokenStream &tokens,
                                const AstNode *program) {
  std::vector<Report> reports;

  // Token method: a division or remainder operator directly followed by a
  // literal zero. Fast, but blind to values that merely happen to be zero.
  for (const char *op : {"/", "%"}) {
    TokenPattern pattern{TokenMatcher::exact(op), TokenMatcher::exact("0")};
    for (const TokenMatch &m : matchTokens(pattern, tokens))
      reports.push_back(makeStyleReport(
          "style.TokenDivLiteralZero",
          "Division by a literal zero (token pattern)", m.loc));
  }

  // AST method: self-assignment, compared by resolved declaration so
  // shadowed variables with the same spelling do not fool it.
  AstMatcher assign = kindIs(AstKind::AssignStmt);
  for (const AstMatch &m : matchAst(assign, program)) {
    if (m.node->assignOp != AssignOpKind::Assign)
      continue;
    if (sameLvalueExpr(m.node->assignLhs(), m.node->assignRhs())) {
      std::string what = m.node->assignLhs()->kind == AstKind::VarRef
                             ? "Variable '" + m.node->assignLhs()->name +
                                   "' is assigned to itself"
                             : "Array element is assigned to itself";
      reports.push_back(
          makeStyleReport("style.SelfAssign", what, m.node->loc));
    }
  }

  // AST method: if/while over a constant condition.
  for (AstKind kind : {AstKind::IfStmt, AstKind::WhileStmt}) {
    AstMatcher constCond = allOf({kindIs(kind), hasChild(0, intLit())});
    for (const AstMatch &m : matchAst(constCond, program))
      reports.push_back(makeStyleReport("style.ConstantCondition",
                                        "Condition is a constant",
                                        m.node->cond()->loc));
  }

  return reports;
}

} // namespace minisa
