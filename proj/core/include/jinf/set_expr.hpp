#pragma once
// Text form for eventually periodic sets.
//
// Grammar, with whitespace allowed between tokens:
//   expr := 'evens' | 'odds'
//         | '{' int (',' int)* '}'
//         | 'mod' '(' modulus ',' residue ')'
//         | 'per' '(' bits ';' bits ')'
//         | 'complement' '(' expr ')'
//         | ('union' | 'inter' | 'diff' | 'symdiff') '(' expr ',' expr ')'
//   bits := [01]*
//
// per(prefix;period) lists explicit membership bits for 1, 2, ... followed by
// the repeating tail, so per(;01) is the even numbers and per(;0) is empty.

#include <cstdint>
#include <string>

#include "jinf/errors.hpp"
#include "jinf/periodic_set.hpp"

namespace jinf {

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t col, const std::string& expected)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(col) +
              ": expected " + expected),
        line(line),
        col(col),
        expected(expected) {}
  std::size_t line;
  std::size_t col;
  std::string expected;
};

PeriodicSet parseSetExpression(const std::string& text);

// Inverse of the parser on canonical sets: nonempty finite sets come out as
// '{..}', everything else as 'per(prefix;period)'.
std::string renderSet(const PeriodicSet& s);

}  // namespace jinf
