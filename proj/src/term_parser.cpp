#include "latticemed/term_parser.hpp"

#include <cctype>

#include "latticemed/errors.hpp"

namespace latmed {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ParsedTerm run() {
    auto t = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return ParsedTerm{std::move(t), std::move(vars_)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_ + 1) + ": " + what, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  LatticeTerm expr() {
    std::vector<LatticeTerm> parts;
    parts.push_back(term());
    while (eat('|')) parts.push_back(term());
    return LatticeTerm::join_of(std::move(parts));
  }

  LatticeTerm term() {
    std::vector<LatticeTerm> parts;
    parts.push_back(atom());
    while (eat('&')) parts.push_back(atom());
    return LatticeTerm::meet_of(std::move(parts));
  }

  LatticeTerm atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected an atom");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected an atom");

    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    std::string ident(src_.substr(start, pos_ - start));

    const bool call = pos_ < src_.size() && src_[pos_] == '(';
    if (call && ident == "med") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(',');
      auto cc = expr();
      expect(')');
      return median_term(std::move(a), std::move(b), std::move(cc));
    }
    if (call && ident.size() == 2 && ident[0] == 'M' &&
        std::isdigit(static_cast<unsigned char>(ident[1]))) {
      const int k = ident[1] - '0';
      expect('(');
      std::vector<LatticeTerm> args;
      args.push_back(expr());
      while (eat(',')) args.push_back(expr());
      expect(')');
      if (k < 1 || k > static_cast<int>(args.size())) {
        throw ParseError("M" + std::to_string(k) + " needs k in [1," +
                             std::to_string(args.size()) + "] for " + std::to_string(args.size()) +
                             " arguments",
                         pos_);
      }
      return mk_term(std::move(args), k);
    }
    return LatticeTerm::variable(var_index(ident));
  }

  int var_index(const std::string& name) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return static_cast<int>(i);
    }
    vars_.push_back(name);
    return static_cast<int>(vars_.size()) - 1;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

void print_term(const LatticeTerm& t, const std::vector<std::string>& vars, std::string& out,
                bool parenthesize_join) {
  switch (t.kind) {
    case LatticeTerm::Kind::Var:
      out += vars.at(static_cast<std::size_t>(t.var));
      return;
    case LatticeTerm::Kind::Meet:
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += " & ";
        const bool child_join = t.children[i].kind == LatticeTerm::Kind::Join;
        if (child_join) out += '(';
        print_term(t.children[i], vars, out, false);
        if (child_join) out += ')';
      }
      return;
    case LatticeTerm::Kind::Join:
      if (parenthesize_join) out += '(';
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += " | ";
        print_term(t.children[i], vars, out, false);
      }
      if (parenthesize_join) out += ')';
      return;
  }
}

}  // namespace

ParsedTerm parse_term(std::string_view source) { return Parser(source).run(); }

std::string term_to_string(const LatticeTerm& term, const std::vector<std::string>& variables) {
  std::string out;
  print_term(term, variables, out, false);
  return out;
}

}  // namespace latmed
