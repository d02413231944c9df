//===--- Lexer.hpp - MiniC tokenizer ----------------------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "minisa/Token.hpp"

#include <string>
#include <vector>

namespace minisa {

/// Splits MiniC source text into tokens. Whitespace and comments (`//` to
/// end of line, `/* ... */`) produce no tokens; the final token is always
/// EndOfFile. Throws FrontendError(LexicalError) on characters outside the
/// language alphabet and on unterminated block comments.
TokenStream tokenize(const std::string &source, const std::string &file);

bool isKeyword(const std::string &text);

} // namespace minisa
