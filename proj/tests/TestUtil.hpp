// Shared helpers for the test suites.
#pragma once

#include "minisa/Desugar.hpp"
#include "minisa/Driver.hpp"
#include "minisa/Lexer.hpp"
#include "minisa/Parser.hpp"
#include "minisa/Sema.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace minisa::test {

/// Parse + sema, no desugaring. The context must outlive the tree.
inline AstNode *frontend(const std::string &source, AstContext &ctx,
                         const std::string &path = "test.mc") {
  AstNode *program = parse(tokenize(source, path), ctx);
  analyzeSemantics(program);
  return program;
}

/// Parse + sema + desugar.
inline AstNode *frontendDesugared(const std::string &source, AstContext &ctx,
                                  const std::string &path = "test.mc") {
  return desugar(frontend(source, ctx, path), ctx);
}

/// Full pipeline on a source string.
inline CompiledFile compiled(const std::string &source,
                             const std::string &path = "test.mc") {
  return compileSource(source, path);
}

inline std::string corpusPath(const std::string &name) {
  return std::string(MINISA_CORPUS_DIR) + "/" + name;
}

inline std::string readCorpus(const std::string &name) {
  std::ifstream in(corpusPath(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// The CFG of the first function with a body.
inline const Cfg &firstCfg(const CompiledFile &file) { return file.cfgs[0]; }

} // namespace minisa::test
