#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ueq/term.hpp"

namespace ueq {

/// Parse failure in any of the text formats. line/column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

// Printing uses the canonical grammar: applications f(t1,...,tn), constants
// bare, variables X<id>. No whitespace. This form is normative for trace and
// knowledge-base files.
void print_term(std::string& out, const TermPtr& t, const Signature& sig);
std::string print_term(const TermPtr& t, const Signature& sig);
std::string print_equation(const TermPtr& l, const TermPtr& r, const Signature& sig);
std::string print_subst(const Subst& s, const Signature& sig);
std::string print_position(const Position& p);

/// Cursor over a single line (or fragment) of one of the text formats.
/// Variables come in two modes: canonical mode requires X<digits> and maps the
/// digits to the variable id verbatim; named mode accepts any identifier
/// starting with an uppercase letter and interns it in the given scope.
class TermCursor {
 public:
  TermCursor(std::string_view text, Signature& sig, int line = 1, int column_base = 1)
      : text_(text), sig_(&sig), line_(line), column_base_(column_base) {}

  /// Scope for named-mode variables; fresh ids are handed out in first-use order.
  struct VarScope {
    std::map<std::string, std::int32_t> names;
    std::int32_t next = 0;
  };

  TermPtr read_term_canonical();
  TermPtr read_term_named(VarScope& scope);
  Subst read_subst_canonical();
  Position read_position();

  void skip_ws();
  bool at_end();
  bool try_consume(char c);
  bool try_consume_word(std::string_view w);
  void expect(char c);
  void expect_word(std::string_view w);
  std::string read_identifier();
  std::string read_quoted();
  long read_integer();

  std::size_t offset() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  TermPtr read_term(VarScope* scope);

  std::string_view text_;
  Signature* sig_;
  std::size_t pos_ = 0;
  int line_;
  int column_base_;
};

}  // namespace ueq
