#ifndef PROBPLAN_SEXPR_H
#define PROBPLAN_SEXPR_H

#include "errors.h"

#include <string>
#include <string_view>
#include <vector>

namespace probplan {
/*
  Generic s-expression node. Symbols are lower-cased on read since PDDL
  identifiers are case-insensitive; numbers stay symbols and are
  interpreted by the caller.
*/
struct SExpr {
    bool list = false;
    std::string text;
    std::vector<SExpr> children;
    SourceLocation location;

    bool is_symbol() const {return !list;}
    bool is_symbol(std::string_view s) const {return !list && text == s;}
    bool is_list() const {return list;}
    // True for a list whose first element is the given keyword symbol.
    bool is_form(std::string_view keyword) const;
    std::string str() const;
};

std::vector<SExpr> read_sexprs(std::string_view text, const std::string &file);
}

#endif
