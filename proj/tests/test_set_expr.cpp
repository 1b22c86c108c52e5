#include <doctest.h>

#include <string>
#include <vector>

#include "jinf/periodic_set.hpp"
#include "jinf/set_expr.hpp"

using namespace jinf;

TEST_CASE("names, literals, and constructors evaluate canonically") {
  CHECK(parseSetExpression("evens") == PeriodicSet::evens());
  CHECK(parseSetExpression("odds") == PeriodicSet::odds());
  CHECK(parseSetExpression("{2, 4, 6}") == PeriodicSet::finite({2, 4, 6}));
  CHECK(parseSetExpression("mod(3,0)") == PeriodicSet::multiples(3));
  CHECK(parseSetExpression("mod(5,2)") == PeriodicSet::residueClass(5, 2));
  CHECK(parseSetExpression("per(10;01)") ==
        unite(subtract(PeriodicSet::evens(), PeriodicSet::finite({2})), PeriodicSet::finite({1})));
  CHECK(parseSetExpression("per(;0)").isEmpty());
}

TEST_CASE("operators compose and whitespace is insignificant") {
  CHECK(parseSetExpression("inter(evens, mod(3,0))") == PeriodicSet::multiples(6));
  CHECK(parseSetExpression("union({1}, diff(evens,{2}))") ==
        parseSetExpression("per(10;01)"));
  CHECK(parseSetExpression("complement(evens)") == PeriodicSet::odds());
  CHECK(parseSetExpression("symdiff(evens, odds)") == PeriodicSet::naturals());
  CHECK(parseSetExpression("  union\n\t( {1} ,\n diff( evens , {2} ) )  ") ==
        parseSetExpression("union({1},diff(evens,{2}))"));

  // membership spot check of the nested example
  const PeriodicSet s = parseSetExpression("union({1}, diff(evens,{2}))");
  for (std::uint64_t n = 1; n <= 10; ++n) {
    CHECK(s.member(n) == (n == 1 || (n % 2 == 0 && n != 2)));
  }
}

TEST_CASE("rendered text parses back to the same set") {
  const std::vector<std::string> inputs = {
      "evens",
      "{1,5,9}",
      "per(110;0101)",
      "union(mod(3,1), {2})",
      "complement({1,2,3})",
      "per(;0)",
      "complement(per(;0))",
  };
  for (const std::string& input : inputs) {
    const PeriodicSet s = parseSetExpression(input);
    CHECK(parseSetExpression(renderSet(s)) == s);
    CHECK(renderSet(parseSetExpression(renderSet(s))) == renderSet(s));
  }
}

TEST_CASE("parse errors carry the source location and expectation") {
  auto expectError = [](const std::string& text, std::size_t line, std::size_t col,
                        const std::string& expected) {
    try {
      parseSetExpression(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col == col);
      CHECK(e.expected == expected);
    }
  };

  expectError("", 1, 1, "a set expression");
  expectError("union({1}", 1, 10, "','");
  expectError("mod(4,4)", 1, 8, "a residue below the modulus");
  expectError("mod(0,0)", 1, 6, "a positive modulus");
  expectError("{}", 1, 2, "an element");
  expectError("{0}", 1, 3, "an element of at least 1");
  expectError("per(1;)", 1, 7, "at least one period bit");
  expectError("evens evens", 1, 7, "end of input");
  expectError("wombat", 1, 7, "a set name or operation");
  expectError("{1000001}", 1, 8, "an element of at most 1000000");
  expectError("union(\n  {1},\n  oops)", 3, 7, "a set name or operation");
}
