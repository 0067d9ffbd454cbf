#include "ueq/parser.hpp"

#include <cctype>
#include <set>

namespace ueq {

namespace {

class ProblemParser {
 public:
  ProblemParser(std::string_view text, Problem* out) : text_(text), out_(out) {}

  void run() {
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) return;
      parse_cnf();
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool try_consume(char c) {
    skip_trivia();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  }

  std::string read_identifier() {
    skip_trivia();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  TermPtr read_term(std::map<std::string, std::int32_t>& scope) {
    skip_trivia();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_char(text_[pos_])) fail("expected term");
    bool upper = std::isupper(static_cast<unsigned char>(text_[pos_]));
    std::string id = read_identifier();
    if (upper) {
      auto it = scope.find(id);
      if (it != scope.end()) return Term::var(it->second);
      std::int32_t v = var_counter_++;
      scope.emplace(std::move(id), v);
      return Term::var(v);
    }
    std::vector<TermPtr> args;
    if (try_consume('(')) {
      do {
        args.push_back(read_term(scope));
      } while (try_consume(','));
      expect(')');
    }
    (void)start;
    Symbol f = out_->signature.intern(id, static_cast<std::uint32_t>(args.size()));
    return Term::app(f, std::move(args));
  }

  struct Literal {
    Sign sign;
    TermPtr left;
    TermPtr right;
  };

  Literal read_literal(std::map<std::string, std::int32_t>& scope) {
    skip_trivia();
    std::size_t at = pos_;
    if (try_consume('~')) {
      skip_trivia();
      if (try_consume('(')) {
        TermPtr l = read_term(scope);
        bool neq = false;
        if (try_consume('!')) {
          expect('=');
          neq = true;
        } else {
          expect('=');
        }
        TermPtr r = read_term(scope);
        expect(')');
        // ~(s = t) is a goal, ~(s != t) a fact
        return Literal{neq ? Sign::Positive : Sign::Negative, std::move(l), std::move(r)};
      }
      TermPtr atom = read_term(scope);
      if (atom->is_var()) fail("a literal cannot be a bare variable", at);
      return Literal{Sign::Negative, std::move(atom),
                     Term::constant(out_->signature.truth())};
    }
    TermPtr l = read_term(scope);
    skip_trivia();
    if (try_consume('!')) {
      expect('=');
      TermPtr r = read_term(scope);
      return Literal{Sign::Negative, std::move(l), std::move(r)};
    }
    if (try_consume('=')) {
      TermPtr r = read_term(scope);
      return Literal{Sign::Positive, std::move(l), std::move(r)};
    }
    if (l->is_var()) fail("a literal cannot be a bare variable", at);
    return Literal{Sign::Positive, std::move(l), Term::constant(out_->signature.truth())};
  }

  void parse_cnf() {
    skip_trivia();
    std::size_t at = pos_;
    std::string kw = read_identifier();
    if (kw != "cnf") fail("expected 'cnf'", at);
    expect('(');
    std::string name = read_identifier();
    if (!names_.insert(name).second) fail("duplicate clause name '" + name + "'", at);
    expect(',');
    std::size_t role_at = pos_;
    skip_trivia();
    role_at = pos_;
    std::string role = read_identifier();
    if (role != "axiom" && role != "hypothesis" && role != "negated_conjecture")
      fail("unknown role '" + role + "'", role_at);
    expect(',');
    std::map<std::string, std::int32_t> scope;
    bool outer_paren = try_consume('(');
    std::size_t lit_at = pos_;
    Literal lit = read_literal(scope);
    skip_trivia();
    if (pos_ < text_.size() && text_[pos_] == '|')
      fail("non-unit clause: only single-literal clauses are accepted", lit_at);
    if (outer_paren) expect(')');
    expect(')');
    expect('.');

    int line = 1;
    for (std::size_t i = 0; i < at; ++i)
      if (text_[i] == '\n') ++line;
    InputClause c{std::move(name), std::move(role), lit.sign, std::move(lit.left),
                  std::move(lit.right), line};
    if (c.sign == Sign::Negative)
      out_->goals.push_back(std::move(c));
    else
      out_->axioms.push_back(std::move(c));
  }

  std::string_view text_;
  Problem* out_;
  std::size_t pos_ = 0;
  std::int32_t var_counter_ = 0;
  std::set<std::string> names_;
};

}  // namespace

Problem parse_problem(std::string_view text, std::string source) {
  Problem p;
  p.source = std::move(source);
  ProblemParser(text, &p).run();
  return p;
}

namespace {

void print_clause(std::string& out, const InputClause& c, const Signature& sig) {
  out += "cnf(";
  out += c.name;
  out += ", ";
  out += c.role;
  out += ", ";
  bool atom = !c.right->is_var() && c.right->symbol().id == 0 && !c.left->is_var();
  if (atom) {
    if (c.sign == Sign::Negative) out += "~ ";
    print_term(out, c.left, sig);
  } else {
    print_term(out, c.left, sig);
    out += c.sign == Sign::Negative ? " != " : " = ";
    print_term(out, c.right, sig);
  }
  out += ").\n";
}

}  // namespace

std::string print_problem(const Problem& p) {
  std::string out;
  for (const auto& c : p.axioms) print_clause(out, c, p.signature);
  for (const auto& c : p.goals) print_clause(out, c, p.signature);
  return out;
}

}  // namespace ueq
