//===--- Token.hpp - Lexical elements of MiniC ------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/SourceLocation.hpp"

#include <string>
#include <vector>

namespace minisa {

enum class TokenKind {
  Identifier,
  IntLiteral,
  Keyword,
  Punctuator,
  EndOfFile,
};

const char *tokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceLocation loc;

  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, const std::string &t) const {
    return kind == k && text == t;
  }
};

using TokenStream = std::vector<Token>;

} // namespace minisa
