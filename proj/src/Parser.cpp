//===--- Parser.cpp - Recursive descent parser for MiniC --------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/Parser.hpp"

#include "minisa/Diagnostics.hpp"

#include <cstdlib>

namespace minisa {

namespace {

class Parser {
public:
  Parser(const TokenStream &tokens, AstContext &ctx)
      : tokens_(tokens), ctx_(ctx) {}

  AstNode *parseProgram() {
    AstNode *program = ctx_.create(AstKind::Program, peek().loc);
    while (!peek().is(TokenKind::EndOfFile))
      program->children.push_back(parseFunctionDecl());
    return program;
  }

private:
  const TokenStream &tokens_;
  AstContext &ctx_;
  std::size_t pos_ = 0;

  const Token &peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token &advance() {
    const Token &t = peek();
    if (!t.is(TokenKind::EndOfFile))
      ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &found = peek();
    std::string what = found.is(TokenKind::EndOfFile)
                           ? "end of file"
                           : "'" + found.text + "'";
    throw FrontendError(ErrorKind::SyntaxError, found.loc,
                        "expected " + expected + ", found " + what);
  }

  const Token &expect(TokenKind kind, const std::string &text) {
    if (!peek().is(kind, text))
      fail("'" + text + "'");
    return advance();
  }

  bool consumeIf(TokenKind kind, const std::string &text) {
    if (peek().is(kind, text)) {
      advance();
      return true;
    }
    return false;
  }

  std::string expectIdentifier() {
    if (!peek().is(TokenKind::Identifier))
      fail("identifier");
    return advance().text;
  }

  AstNode *parseFunctionDecl() {
    bool returnsValue;
    if (peek().is(TokenKind::Keyword, "int"))
      returnsValue = true;
    else if (peek().is(TokenKind::Keyword, "void"))
      returnsValue = false;
    else
      fail("'int' or 'void'");
    SourceLocation loc = advance().loc;

    AstNode *fn = ctx_.create(AstKind::FunctionDecl, loc);
    fn->returnsValue = returnsValue;
    fn->name = expectIdentifier();

    expect(TokenKind::Punctuator, "(");
    if (!peek().is(TokenKind::Punctuator, ")")) {
      fn->children.push_back(parseParam());
      while (consumeIf(TokenKind::Punctuator, ","))
        fn->children.push_back(parseParam());
    }
    expect(TokenKind::Punctuator, ")");

    // A ';' body makes this a prototype for an externally defined function.
    if (consumeIf(TokenKind::Punctuator, ";")) {
      fn->hasBody = false;
      fn->endLoc = fn->loc;
      return fn;
    }
    fn->hasBody = true;
    AstNode *body = parseBlock();
    fn->endLoc = body->endLoc;
    fn->children.push_back(body);
    return fn;
  }

  AstNode *parseParam() {
    const Token &ty = expect(TokenKind::Keyword, "int");
    AstNode *param = ctx_.create(AstKind::ParamDecl, ty.loc);
    param->byRef = consumeIf(TokenKind::Punctuator, "&");
    param->name = expectIdentifier();
    return param;
  }

  AstNode *parseBlock() {
    const Token &open = expect(TokenKind::Punctuator, "{");
    AstNode *block = ctx_.create(AstKind::Block, open.loc);
    while (!peek().is(TokenKind::Punctuator, "}"))
      block->children.push_back(parseStmt());
    block->endLoc = advance().loc; // '}'
    return block;
  }

  AstNode *parseStmt() {
    const Token &t = peek();
    if (t.is(TokenKind::Keyword, "int"))
      return parseVarDecl();
    if (t.is(TokenKind::Keyword, "if"))
      return parseIf();
    if (t.is(TokenKind::Keyword, "while"))
      return parseWhile();
    if (t.is(TokenKind::Keyword, "for"))
      return parseFor();
    if (t.is(TokenKind::Keyword, "return"))
      return parseReturn();
    if (t.is(TokenKind::Punctuator, "{"))
      return parseBlock();
    if (t.is(TokenKind::Punctuator, ";")) {
      AstNode *empty = ctx_.create(AstKind::EmptyStmt, advance().loc);
      return empty;
    }
    if (t.is(TokenKind::Identifier)) {
      if (peek(1).is(TokenKind::Punctuator, "(")) {
        AstNode *stmt = ctx_.create(AstKind::ExprStmt, t.loc);
        stmt->children.push_back(parseCall());
        expect(TokenKind::Punctuator, ";");
        return stmt;
      }
      AstNode *assign = parseAssign();
      expect(TokenKind::Punctuator, ";");
      return assign;
    }
    fail("a statement");
  }

  AstNode *parseVarDecl() {
    const Token &ty = expect(TokenKind::Keyword, "int");
    AstNode *decl = ctx_.create(AstKind::VarDecl, ty.loc);
    decl->name = expectIdentifier();
    if (consumeIf(TokenKind::Punctuator, "[")) {
      if (!peek().is(TokenKind::IntLiteral))
        fail("an integer literal array length");
      decl->arrayLen = std::strtoll(advance().text.c_str(), nullptr, 10);
      expect(TokenKind::Punctuator, "]");
    }
    if (consumeIf(TokenKind::Punctuator, "="))
      decl->children.push_back(parseExpr());
    expect(TokenKind::Punctuator, ";");
    return decl;
  }

  AstNode *parseIf() {
    const Token &kw = advance();
    AstNode *stmt = ctx_.create(AstKind::IfStmt, kw.loc);
    expect(TokenKind::Punctuator, "(");
    stmt->children.push_back(parseExpr());
    expect(TokenKind::Punctuator, ")");
    stmt->children.push_back(parseStmt());
    if (consumeIf(TokenKind::Keyword, "else"))
      stmt->children.push_back(parseStmt());
    return stmt;
  }

  AstNode *parseWhile() {
    const Token &kw = advance();
    AstNode *stmt = ctx_.create(AstKind::WhileStmt, kw.loc);
    expect(TokenKind::Punctuator, "(");
    stmt->children.push_back(parseExpr());
    expect(TokenKind::Punctuator, ")");
    stmt->children.push_back(parseStmt());
    return stmt;
  }

  AstNode *parseFor() {
    const Token &kw = advance();
    AstNode *stmt = ctx_.create(AstKind::ForStmt, kw.loc);
    expect(TokenKind::Punctuator, "(");
    if (!peek().is(TokenKind::Punctuator, ";")) {
      stmt->children.push_back(parseAssign());
      stmt->forHasInit = true;
    }
    expect(TokenKind::Punctuator, ";");
    if (!peek().is(TokenKind::Punctuator, ";")) {
      stmt->children.push_back(parseExpr());
      stmt->forHasCond = true;
    }
    expect(TokenKind::Punctuator, ";");
    if (!peek().is(TokenKind::Punctuator, ")")) {
      stmt->children.push_back(parseAssign());
      stmt->forHasStep = true;
    }
    expect(TokenKind::Punctuator, ")");
    stmt->children.push_back(parseStmt());
    return stmt;
  }

  AstNode *parseReturn() {
    const Token &kw = advance();
    AstNode *stmt = ctx_.create(AstKind::ReturnStmt, kw.loc);
    if (!peek().is(TokenKind::Punctuator, ";"))
      stmt->children.push_back(parseExpr());
    expect(TokenKind::Punctuator, ";");
    return stmt;
  }

  AstNode *parseAssign() {
    AstNode *lvalue = parseLvalue();
    AssignOpKind op;
    const Token &t = peek();
    if (t.is(TokenKind::Punctuator, "="))
      op = AssignOpKind::Assign;
    else if (t.is(TokenKind::Punctuator, "+="))
      op = AssignOpKind::AddAssign;
    else if (t.is(TokenKind::Punctuator, "-="))
      op = AssignOpKind::SubAssign;
    else if (t.is(TokenKind::Punctuator, "*="))
      op = AssignOpKind::MulAssign;
    else if (t.is(TokenKind::Punctuator, "/="))
      op = AssignOpKind::DivAssign;
    else
      fail("an assignment operator");
    advance();
    AstNode *stmt = ctx_.create(AstKind::AssignStmt, lvalue->loc);
    stmt->assignOp = op;
    stmt->children.push_back(lvalue);
    stmt->children.push_back(parseExpr());
    return stmt;
  }

  AstNode *parseLvalue() {
    if (!peek().is(TokenKind::Identifier))
      fail("an lvalue");
    const Token &ident = advance();
    AstNode *ref = ctx_.create(AstKind::VarRef, ident.loc);
    ref->name = ident.text;
    if (peek().is(TokenKind::Punctuator, "[")) {
      AstNode *index = ctx_.create(AstKind::ArrayIndex, ident.loc);
      advance();
      index->children.push_back(ref);
      index->children.push_back(parseExpr());
      expect(TokenKind::Punctuator, "]");
      return index;
    }
    return ref;
  }

  // Binary operator precedence tiers, loosest first.
  static constexpr int kNumTiers = 6;
  bool tierMatches(int tier, const Token &t, BinaryOpKind &op) const {
    if (!t.is(TokenKind::Punctuator))
      return false;
    const std::string &s = t.text;
    switch (tier) {
    case 0:
      if (s == "||") { op = BinaryOpKind::LogicalOr; return true; }
      return false;
    case 1:
      if (s == "&&") { op = BinaryOpKind::LogicalAnd; return true; }
      return false;
    case 2:
      if (s == "==") { op = BinaryOpKind::Eq; return true; }
      if (s == "!=") { op = BinaryOpKind::Ne; return true; }
      return false;
    case 3:
      if (s == "<") { op = BinaryOpKind::Lt; return true; }
      if (s == "<=") { op = BinaryOpKind::Le; return true; }
      if (s == ">") { op = BinaryOpKind::Gt; return true; }
      if (s == ">=") { op = BinaryOpKind::Ge; return true; }
      return false;
    case 4:
      if (s == "+") { op = BinaryOpKind::Add; return true; }
      if (s == "-") { op = BinaryOpKind::Sub; return true; }
      return false;
    case 5:
      if (s == "*") { op = BinaryOpKind::Mul; return true; }
      if (s == "/") { op = BinaryOpKind::Div; return true; }
      if (s == "%") { op = BinaryOpKind::Rem; return true; }
      return false;
    default:
      return false;
    }
  }

  AstNode *parseExpr() { return parseBinary(0); }

  AstNode *parseBinary(int tier) {
    if (tier >= kNumTiers)
      return parseUnary();
    AstNode *lhs = parseBinary(tier + 1);
    BinaryOpKind op;
    while (tierMatches(tier, peek(), op)) {
      const Token &opTok = advance();
      AstNode *node = ctx_.create(AstKind::BinaryOp, opTok.loc);
      node->binaryOp = op;
      node->children.push_back(lhs);
      node->children.push_back(parseBinary(tier + 1));
      lhs = node;
    }
    return lhs;
  }

  AstNode *parseUnary() {
    const Token &t = peek();
    if (t.is(TokenKind::Punctuator, "-") || t.is(TokenKind::Punctuator, "!")) {
      advance();
      AstNode *node = ctx_.create(AstKind::UnaryOp, t.loc);
      node->unaryOp =
          t.text == "-" ? UnaryOpKind::Neg : UnaryOpKind::LogicalNot;
      node->children.push_back(parseUnary());
      return node;
    }
    return parsePrimary();
  }

  AstNode *parsePrimary() {
    const Token &t = peek();
    if (t.is(TokenKind::IntLiteral)) {
      advance();
      AstNode *lit = ctx_.create(AstKind::IntLit, t.loc);
      lit->intValue = std::strtoll(t.text.c_str(), nullptr, 10);
      return lit;
    }
    if (t.is(TokenKind::Identifier)) {
      if (peek(1).is(TokenKind::Punctuator, "("))
        return parseCall();
      return parseLvalue();
    }
    if (t.is(TokenKind::Punctuator, "(")) {
      advance();
      AstNode *inner = parseExpr();
      expect(TokenKind::Punctuator, ")");
      return inner; // parentheses leave no node behind
    }
    fail("an expression");
  }

  AstNode *parseCall() {
    const Token &ident = advance();
    AstNode *call = ctx_.create(AstKind::Call, ident.loc);
    call->name = ident.text;
    expect(TokenKind::Punctuator, "(");
    if (!peek().is(TokenKind::Punctuator, ")")) {
      call->children.push_back(parseExpr());
      while (consumeIf(TokenKind::Punctuator, ","))
        call->children.push_back(parseExpr());
    }
    expect(TokenKind::Punctuator, ")");
    return call;
  }
};

} // namespace

AstNode *parse(const TokenStream &tokens, AstContext &ctx) {
  return Parser(tokens, ctx).parseProgram();
}

} // namespace minisa
