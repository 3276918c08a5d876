#pragma once

#include <string>

#include "od/chain.hpp"
#include "od/term.hpp"

namespace od {

struct SourceText {
  std::string text;
  std::string origin = "<arg>";
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, int line, int col)
      : error(what), line(line), col(col) {}
  int line;
  int col;
};

// Grammar (ASCII, whitespace-insensitive between tokens):
//   term := '0' | 'W' | 'p' | term '+' term | 'f' '(' term ',' term ')'
//         | term '^+' | 'd' '[' term (';' quad (',' quad)*)? ']' '(' term ')'
//   quad := '(' term ',' term ',' term ',' nat ')'
// '+' is left-associative and lowest precedence; '^+' binds tightest.
// Non-canonical spellings are accepted and normalized.
Term parse_term(const SourceText& src);

// Unique spelling per canonical form; parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

std::string print_quads(const std::vector<Quad>& q);

struct DescriptorFile {
  RopeDescriptor desc;
  SynthInputs inputs;
};

// Line-oriented rope descriptor format:
//   N: <int>
//   sigmas: <term> ; <term> ; ...
//   knots: <int,int,...>         (may be empty)
//   indices: <int,int,...>       (may be empty)
//   body: <term>
//   st_top: <term>
//   st[<i>]: <term>              (repeated as needed)
DescriptorFile parse_descriptor(const SourceText& src);

}  // namespace od
