//===--- Matchers.hpp - Token and AST pattern matching ----------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"
#include "minisa/Report.hpp"
#include "minisa/Token.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace minisa {

//===----------------------------------------------------------------------===//
// Token-stream matching
//===----------------------------------------------------------------------===//

/// One step of a token pattern: an exact spelling, any token of a kind, or
/// any single token.
struct TokenMatcher {
  enum class Kind { Exact, OfKind, AnyOne };
  Kind kind = Kind::AnyOne;
  std::string text;
  TokenKind tokenKind = TokenKind::Identifier;

  static TokenMatcher exact(std::string t) {
    return {Kind::Exact, std::move(t), TokenKind::Identifier};
  }
  static TokenMatcher ofKind(TokenKind k) { return {Kind::OfKind, "", k}; }
  static TokenMatcher anyOne() { return {}; }

  bool matches(const Token &token) const;
};

using TokenPattern = std::vector<TokenMatcher>;

struct TokenMatch {
  std::size_t begin = 0; // index into the token stream
  std::size_t length = 0;
  SourceLocation loc; // location of the first matched token
};

/// All leftmost, non-overlapping, contiguous matches in stream order.
std::vector<TokenMatch> matchTokens(const TokenPattern &pattern,
                                    const TokenStream &tokens);

//===----------------------------------------------------------------------===//
// AST matching
//===----------------------------------------------------------------------===//

using Bindings = std::map<std::string, const AstNode *>;

/// Combinator tree over AST nodes. Built programmatically; see the factory
/// functions below.
class AstMatcher {
public:
  using Predicate =
      std::function<bool(const AstNode *, Bindings &)>;

  explicit AstMatcher(Predicate pred) : pred_(std::move(pred)) {}

  bool matches(const AstNode *node, Bindings &bindings) const {
    return pred_(node, bindings);
  }

private:
  Predicate pred_;
};

AstMatcher kindIs(AstKind kind);
AstMatcher binaryOp(BinaryOpKind op);
AstMatcher intLit();                     // any literal
AstMatcher intLit(std::int64_t value);   // a specific literal
AstMatcher varRefNamed();                // any variable reference
AstMatcher varRefNamed(std::string name);
AstMatcher hasChild(std::size_t index, AstMatcher inner);
AstMatcher anyDescendant(AstMatcher inner);
AstMatcher allOf(std::vector<AstMatcher> matchers);
AstMatcher bind(std::string label, AstMatcher inner);

struct AstMatch {
  const AstNode *node = nullptr;
  Bindings bindings;
};

/// Pre-order traversal; every node satisfying the matcher yields one match.
std::vector<AstMatch> matchAst(const AstMatcher &matcher, const AstNode *root);

//===----------------------------------------------------------------------===//
// Built-in style checks
//===----------------------------------------------------------------------===//

/// Runs the lightweight tiers over one file: the token method
/// (style.TokenDivLiteralZero) and the AST method (style.SelfAssign,
/// style.ConstantCondition). Works on the surface syntax, before
/// desugaring.
std::vector<Report> styleChecks(const TokenStream &tokens,
                                const AstNode *program);

} // namespace minisa
