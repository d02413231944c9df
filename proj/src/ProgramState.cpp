//===--- ProgramState.cpp - Immutable symbolic state ------------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/ProgramState.hpp"

namespace minisa {

std::string MemRegion::str(const SymbolRegistry &symbols) const {
  std::string out = decl->name;
  if (frame != 0)
    out += "@f" + std::to_string(frame);
  if (element) {
    out += "[";
    if (std::holds_alternative<std::int64_t>(*element))
      out += std::to_string(std::get<std::int64_t>(*element));
    else
      out += symbols.render(std::get<SymExpr>(*element));
    out += "]";
  }
  return out;
}

std::string SVal::str(const SymbolRegistry &symbols) const {
  switch (kind_) {
  case Kind::Undefined:
    return "Undefined";
  case Kind::Unknown:
    return "Unknown";
  case Kind::Concrete:
    return std::to_string(concrete_);
  case Kind::Symbolic:
    return symbols.render(sym_);
  case Kind::Region:
    return "&" + region_->str(symbols);
  }
  return "?";
}

namespace {

// -1 / 0 / +1 three-way comparison over the maps, GDM entries via their
// virtual comparators.
int compareGdm(const GdmMap &a, const GdmMap &b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return ia->first < ib->first ? -1 : 1;
    const GdmEntry &ea = *ia->second;
    const GdmEntry &eb = *ib->second;
    if (!ea.equals(eb))
      return ea.less(eb) ? -1 : 1;
  }
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  return 0;
}

} // namespace

bool ProgramState::operator==(const ProgramState &o) const {
  return env == o.env && store == o.store && constraints == o.constraints &&
         compareGdm(gdm, o.gdm) == 0;
}

bool ProgramState::operator<(const ProgramState &o) const {
  if (env != o.env)
    return env < o.env;
  if (store != o.store)
    return store < o.store;
  if (constraints != o.constraints)
    return constraints < o.constraints;
  return compareGdm(gdm, o.gdm) < 0;
}

} // namespace minisa
