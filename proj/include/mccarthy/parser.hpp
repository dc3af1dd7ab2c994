// Concrete syntax for λ-terms:
//   \x. M  or  λx. M      abstraction, multi-binder sugar \x y. M
//   M N                   application (left-associative)
//   lowercase identifier  variable
//   Uppercase identifier  named reference (combinator library / script defs)
//   _|_ _HA _IL _O _D     ⊥ constants
// Scripts are `Name = term` lines (one per line) followed by a query term.

#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "term.hpp"

namespace mccarthy {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_lambda() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '\\') return true;
    // UTF-8 "λ" = 0xCE 0xBB
    return pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCE &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0xBB;
  }

  void eat_lambda() {
    if (text_[pos_] == '\\')
      ++pos_;
    else
      pos_ += 2;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string parse_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw ParseError("expected identifier", pos_);
    size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // _|_ or _HA/_IL/_O/_D
  std::optional<BotTag> try_bot() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '_') return std::nullopt;
    auto rest = text_.substr(pos_);
    auto starts = [&](std::string_view s) { return rest.substr(0, s.size()) == s; };
    if (starts("_|_")) { pos_ += 3; return BotTag::Plain; }
    if (starts("_HA")) { pos_ += 3; return BotTag::HA; }
    if (starts("_IL")) { pos_ += 3; return BotTag::IL; }
    if (starts("_O")) { pos_ += 2; return BotTag::O; }
    if (starts("_D")) { pos_ += 2; return BotTag::D; }
    throw ParseError("unknown constant", pos_);
  }

  Term parse_term() {
    skip_ws();
    if (at_lambda()) {
      eat_lambda();
      std::vector<std::string> binders;
      binders.push_back(parse_ident());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '.') {
        binders.push_back(parse_ident());
        skip_ws();
      }
      if (!eat('.')) throw ParseError("expected '.' after binders", pos_);
      scope_.insert(scope_.end(), binders.begin(), binders.end());
      Term body = parse_term();
      scope_.resize(scope_.size() - binders.size());
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = lam(*it, body);
      return body;
    }
    return parse_app();
  }

  Term parse_app() {
    Term t = parse_atom_required();
    while (true) {
      auto next = try_atom();
      if (!next) return t;
      t = app(t, *next);
    }
  }

  Term parse_atom_required() {
    auto a = try_atom();
    if (!a) throw ParseError("expected a term", pos_);
    return *a;
  }

  std::optional<Term> try_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    if (at_lambda()) return parse_term();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = parse_term();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return t;
    }
    if (c == '_') {
      auto tag = try_bot();
      if (tag) return bot(*tag);
      return std::nullopt;
    }
    if (ident_start(c)) {
      std::string name = parse_ident();
      // a name bound by an enclosing λ is a variable whatever its case;
      // otherwise Uppercase means a reference into the definition library
      bool bound = std::find(scope_.rbegin(), scope_.rend(), name) != scope_.rend();
      if (!bound && std::isupper(static_cast<unsigned char>(name[0]))) return ref(name);
      return var(name);
    }
    return std::nullopt;
  }

  std::string_view text_;
  size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

// A script defines names (one `Name = term` per line, '#' comments allowed)
// and ends with a query term. Returns the populated environment and query.
inline std::pair<DefEnv, Term> parse_script(std::string_view text) {
  DefEnv env;
  Term query = nullptr;
  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(line_start, nl == std::string_view::npos ? std::string_view::npos : nl - line_start);
    size_t next = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    // strip comments and whitespace-only lines
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      size_t eq = line.find('=');
      bool is_def = false;
      if (eq != std::string_view::npos) {
        // a definition line: identifier '=' term (an '=' can not occur in a term)
        std::string head(line.substr(0, eq));
        std::string name;
        for (char c : head)
          if (!std::isspace(static_cast<unsigned char>(c))) name += c;
        if (!name.empty() && std::isupper(static_cast<unsigned char>(name[0]))) {
          Term body = detail::TermParser(line.substr(eq + 1)).parse();
          env.define(name, body);
          is_def = true;
        }
      }
      if (!is_def) {
        if (query) throw ParseError("multiple query lines in script", line_start);
        query = detail::TermParser(line).parse();
      }
    }
    line_start = next;
  }
  if (!query) throw ParseError("script has no query term", text.size());
  return {std::move(env), query};
}

}  // namespace mccarthy
