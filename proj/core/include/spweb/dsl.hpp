#pragma once

#include <string>

#include "spweb/diagram.hpp"
#include "spweb/webcompile.hpp"

namespace spweb {

struct ParseError : std::runtime_error {
  int line = 1, col = 1;
  ParseError(const std::string& w, int line_, int col_)
      : std::runtime_error(w + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Slice-word grammar, one generator per line or semicolon-separated:
//   width <k>; X <i>; A <i>; U <i>
SliceWord parse_diagram_dsl(const std::string& text);
std::string print_diagram_dsl(const SliceWord& w);

// Web s-expressions: (id k) (cap k) (cup k) (m k l) (s k l) (v3 k l m)
// (ten t1 t2) (cmp t1 t2)
Web parse_web_dsl(const std::string& text);
std::string print_web_dsl(const Web& w);

}  // namespace spweb
