//===--- Lexer.cpp - MiniC tokenizer ----------------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Lexer.hpp"

#include "minisa/Diagnostics.hpp"

#include <array>
#include <cctype>

namespace minisa {

const char *tokenKindName(TokenKind kind) {
  switch (kind) {
  case TokenKind::Identifier:
    return "Identifier";
  case TokenKind::IntLiteral:
    return "IntLiteral";
  case TokenKind::Keyword:
    return "Keyword";
  case TokenKind::Punctuator:
    return "Punctuator";
  case TokenKind::EndOfFile:
    return "EndOfFile";
  }
  return "Unknown";
}

bool isKeyword(const std::string &text) {
  static const std::array<const char *, 6> keywords = {
      "int", "void", "if", "else", "while", "for"};
  for (const char *kw : keywords)
    if (text == kw)
      return true;
  return text == "return";
}

namespace {

class Cursor {
public:
  Cursor(const std::string &source, std::string file)
      : source_(source), file_(std::move(file)) {}

  bool atEnd() const { return pos_ >= source_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < source_.size() ? source_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = source_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  SourceLocation loc() const {
    return {file_, line_, column_, static_cast<std::int64_t>(pos_)};
  }

private:
  const std::string &source_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Multi-character punctuators, longest first so maximal munch works.
const char *const kPunctuators[] = {
    "<=", ">=", "==", "!=", "&&", "||", "+=", "-=", "*=", "/=",
    "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",  "&",  "=",
    "+",  "-",  "*",  "/",  "%",  "<",  ">",  "!",
};

} // namespace

TokenStream tokenize(const std::string &source, const std::string &file) {
  Cursor cur(source, file);
  TokenStream tokens;

  while (!cur.atEnd()) {
    char c = cur.peek();

    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }

    if (c == '/' && cur.peek(1) == '/') {
      while (!cur.atEnd() && cur.peek() != '\n')
        cur.advance();
      continue;
    }

    if (c == '/' && cur.peek(1) == '*') {
      SourceLocation start = cur.loc();
      cur.advance();
      cur.advance();
      bool closed = false;
      while (!cur.atEnd()) {
        if (cur.peek() == '*' && cur.peek(1) == '/') {
          cur.advance();
          cur.advance();
          closed = true;
          break;
        }
        cur.advance();
      }
      if (!closed)
        throw FrontendError(ErrorKind::LexicalError, start,
                            "unterminated block comment");
      continue;
    }

    SourceLocation loc = cur.loc();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (!cur.atEnd() && (std::isalnum(static_cast<unsigned char>(
                                  cur.peek())) ||
                              cur.peek() == '_'))
        text += cur.advance();
      tokens.push_back({isKeyword(text) ? TokenKind::Keyword
                                        : TokenKind::Identifier,
                        std::move(text), loc});
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!cur.atEnd() &&
             std::isdigit(static_cast<unsigned char>(cur.peek())))
        text += cur.advance();
      // Reject literals that do not fit a signed 64-bit integer. Negative
      // numbers are unary minus applied to a literal, so only the positive
      // bound matters here.
      errno = 0;
      char *end = nullptr;
      unsigned long long value = std::strtoull(text.c_str(), &end, 10);
      if (errno != 0 || value > 9223372036854775807ull)
        throw FrontendError(ErrorKind::LexicalError, loc,
                            "integer literal '" + text +
                                "' does not fit a signed 64-bit integer");
      tokens.push_back({TokenKind::IntLiteral, std::move(text), loc});
      continue;
    }

    bool matched = false;
    for (const char *p : kPunctuators) {
      std::size_t len = std::string_view(p).size();
      bool ok = true;
      for (std::size_t i = 0; i < len; ++i)
        if (cur.peek(i) != p[i]) {
          ok = false;
          break;
        }
      if (ok) {
        std::string text;
        for (std::size_t i = 0; i < len; ++i)
          text += cur.advance();
        tokens.push_back({TokenKind::Punctuator, std::move(text), loc});
        matched = true;
        break;
      }
    }
    if (matched)
      continue;

    throw FrontendError(ErrorKind::LexicalError, loc,
                        std::string("character '") + c +
                            "' is not part of the language alphabet");
  }

  tokens.push_back({TokenKind::EndOfFile, "", cur.loc()});
  return tokens;
}

} // namespace minisa
