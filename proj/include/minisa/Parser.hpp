//===--- Parser.hpp - Recursive descent parser for MiniC --------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Ast.hpp"
#include "minisa/Token.hpp"

namespace minisa {

/// Parses a token stream into a Program node owned by `ctx`. Reports at most
/// one SyntaxError per parse; there is no error recovery.
AstNode *parse(const TokenStream &tokens, AstContext &ctx);

} // namespace minisa
