#include "jinf/set_expr.hpp"

#include <cctype>
#include <string_view>
#include <vector>

namespace jinf {
namespace {

constexpr std::uint64_t kNumberCap = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PeriodicSet parse() {
    PeriodicSet result = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("end of input");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, col_, expected);
  }

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    skipSpace();
    if (done() || peek() != c) fail(std::string("'") + c + "'");
    advance();
  }

  std::uint64_t number(const std::string& what) {
    skipSpace();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(what);
    std::uint64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > kNumberCap) fail(what + " of at most " + std::to_string(kNumberCap));
      advance();
    }
    return value;
  }

  std::string word() {
    skipSpace();
    std::string out;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Bits bitString() {
    skipSpace();
    Bits out;
    while (!done() && (peek() == '0' || peek() == '1')) {
      out.push_back(peek() == '1');
      advance();
    }
    return out;
  }

  PeriodicSet expr() {
    skipSpace();
    if (done()) fail("a set expression");
    if (peek() == '{') {
      advance();
      std::vector<std::uint64_t> elements;
      for (;;) {
        const std::uint64_t n = number("an element");
        if (n < 1) fail("an element of at least 1");
        elements.push_back(n);
        skipSpace();
        if (!done() && peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      expect('}');
      return PeriodicSet::finite(elements);
    }
    const std::string name = word();
    if (name == "evens") return PeriodicSet::evens();
    if (name == "odds") return PeriodicSet::odds();
    if (name == "mod") {
      expect('(');
      const std::uint64_t modulus = number("a modulus");
      if (modulus < 1) fail("a positive modulus");
      if (modulus > kPeriodLimit) fail("a modulus of at most " + std::to_string(kPeriodLimit));
      expect(',');
      const std::uint64_t residue = number("a residue");
      if (residue >= modulus) fail("a residue below the modulus");
      expect(')');
      return PeriodicSet::residueClass(modulus, residue);
    }
    if (name == "per") {
      expect('(');
      Bits prefix = bitString();
      expect(';');
      Bits period = bitString();
      if (period.empty()) fail("at least one period bit");
      expect(')');
      return PeriodicSet::fromBits(std::move(prefix), std::move(period));
    }
    if (name == "complement") {
      expect('(');
      const PeriodicSet inner = expr();
      expect(')');
      return complement(inner);
    }
    if (name != "union" && name != "inter" && name != "diff" && name != "symdiff") {
      fail("a set name or operation");
    }
    expect('(');
    const PeriodicSet lhs = expr();
    expect(',');
    const PeriodicSet rhs = expr();
    expect(')');
    if (name == "union") return unite(lhs, rhs);
    if (name == "inter") return intersect(lhs, rhs);
    if (name == "diff") return subtract(lhs, rhs);
    return symmetricDiff(lhs, rhs);
  }
};

}  // namespace

PeriodicSet parseSetExpression(const std::string& text) { return Parser(text).parse(); }

std::string renderSet(const PeriodicSet& s) { return s.toText(); }

}  // namespace jinf
