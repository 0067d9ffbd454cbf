#include "ueq/term_io.hpp"

#include <cctype>

namespace ueq {

void print_term(std::string& out, const TermPtr& t, const Signature& sig) {
  if (t->is_var()) {
    out += 'X';
    out += std::to_string(t->var_id());
    return;
  }
  out += sig.name(t->symbol());
  if (t->args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t->args().size(); ++i) {
    if (i) out += ',';
    print_term(out, t->args()[i], sig);
  }
  out += ')';
}

std::string print_term(const TermPtr& t, const Signature& sig) {
  std::string out;
  print_term(out, t, sig);
  return out;
}

std::string print_equation(const TermPtr& l, const TermPtr& r, const Signature& sig) {
  std::string out;
  print_term(out, l, sig);
  out += " = ";
  print_term(out, r, sig);
  return out;
}

std::string print_subst(const Subst& s, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += 'X';
    out += std::to_string(v);
    out += ":=";
    print_term(out, t, sig);
  }
  out += '}';
  return out;
}

std::string print_position(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

bool ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) { return ident_start(c); }

}  // namespace

void TermCursor::fail(const std::string& msg) const {
  throw ParseError(msg, line_, column_base_ + static_cast<int>(pos_));
}

void TermCursor::skip_ws() {
  while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
}

bool TermCursor::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

bool TermCursor::try_consume(char c) {
  skip_ws();
  if (pos_ < text_.size() && text_[pos_] == c) {
    ++pos_;
    return true;
  }
  return false;
}

void TermCursor::expect(char c) {
  if (!try_consume(c)) fail(std::string("expected '") + c + "'");
}

bool TermCursor::try_consume_word(std::string_view w) {
  skip_ws();
  if (text_.substr(pos_, w.size()) != w) return false;
  std::size_t end = pos_ + w.size();
  if (end < text_.size() && ident_char(text_[end])) return false;
  pos_ = end;
  return true;
}

void TermCursor::expect_word(std::string_view w) {
  if (!try_consume_word(w)) fail("expected '" + std::string(w) + "'");
}

std::string TermCursor::read_identifier() {
  skip_ws();
  std::size_t start = pos_;
  while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
  if (pos_ == start) fail("expected identifier");
  return std::string(text_.substr(start, pos_ - start));
}

std::string TermCursor::read_quoted() {
  expect('"');
  std::size_t start = pos_;
  while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
  if (pos_ >= text_.size()) fail("unterminated quoted name");
  std::string out(text_.substr(start, pos_ - start));
  ++pos_;
  return out;
}

long TermCursor::read_integer() {
  skip_ws();
  bool neg = pos_ < text_.size() && text_[pos_] == '-';
  if (neg) ++pos_;
  std::size_t start = pos_;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  if (pos_ == start) fail("expected integer");
  long v = std::stol(std::string(text_.substr(start, pos_ - start)));
  return neg ? -v : v;
}

TermPtr TermCursor::read_term(VarScope* scope) {
  skip_ws();
  if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected term");
  bool upper = std::isupper(static_cast<unsigned char>(text_[pos_]));
  std::string id = read_identifier();
  if (upper) {
    if (scope) {
      auto it = scope->names.find(id);
      if (it != scope->names.end()) return Term::var(it->second);
      std::int32_t v = scope->next++;
      scope->names.emplace(std::move(id), v);
      return Term::var(v);
    }
    // canonical mode: X<digits> only, digits are the id
    if (id.size() < 2 || id[0] != 'X') fail("variables must be of the form X<id>");
    for (std::size_t i = 1; i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i])))
        fail("variables must be of the form X<id>");
    return Term::var(static_cast<std::int32_t>(std::stol(id.substr(1))));
  }
  std::vector<TermPtr> args;
  if (try_consume('(')) {
    do {
      args.push_back(read_term(scope));
    } while (try_consume(','));
    expect(')');
  }
  Symbol f = sig_->intern(id, static_cast<std::uint32_t>(args.size()));
  return Term::app(f, std::move(args));
}

TermPtr TermCursor::read_term_canonical() { return read_term(nullptr); }

TermPtr TermCursor::read_term_named(VarScope& scope) { return read_term(&scope); }

Subst TermCursor::read_subst_canonical() {
  Subst out;
  expect('{');
  if (try_consume('}')) return out;
  do {
    skip_ws();
    TermPtr v = read_term(nullptr);
    if (!v->is_var()) fail("substitution domain must be variables");
    expect(':');
    expect('=');
    TermPtr t = read_term(nullptr);
    out.bind(v->var_id(), std::move(t));
  } while (try_consume(','));
  expect('}');
  return out;
}

Position TermCursor::read_position() {
  Position out;
  out.push_back(static_cast<std::uint32_t>(read_integer()));
  while (pos_ < text_.size() && text_[pos_] == '.') {
    ++pos_;
    out.push_back(static_cast<std::uint32_t>(read_integer()));
  }
  return out;
}

}  // namespace ueq
