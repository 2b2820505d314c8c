#include "isolab/phl/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "isolab/error.hpp"

namespace isolab::phl {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  Equals,
  Turnstile,
  Arrow,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '\'' || c == '@';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    const int l = line;
    const int cl = col;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "|-") {
      out.push_back({Tok::Turnstile, "|-", l, cl});
      advance(2);
      continue;
    }
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
      continue;
    }
    Tok kind{};
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case ':': kind = Tok::Colon; break;
      case '=': kind = Tok::Equals; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool reserved(std::string_view word) {
  return word == "theory" || word == "sort" || word == "op" ||
         word == "axiom" || word == "forall" || word == "def" || word == "true";
}

class Parser {
 public:
  Parser(std::string_view src) : toks_(lex(src)) {}

  Theory theory() {
    expect_keyword("theory");
    Theory th;
    th.name = ident("theory name");
    while (!at(Tok::End)) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && t.text == "sort") {
        next();
        const Token& name = peek();
        std::string n = ident("sort name");
        try {
          th.signature.add_sort(n);
        } catch (const SortError& e) {
          throw ParseError(e.what(), name.line, name.column);
        }
        expect(Tok::Semi, "';'");
      } else if (t.kind == Tok::Ident && t.text == "op") {
        next();
        op_decl(th.signature);
      } else if (t.kind == Tok::Ident && t.text == "axiom") {
        next();
        th.axioms.push_back(axiom(th.signature));
      } else {
        fail("expected 'sort', 'op' or 'axiom'");
      }
    }
    return th;
  }

  Term single_term(const Signature& sig, const VarContext& ctx) {
    Term t = term(sig, ctx);
    if (!at(Tok::End)) fail("trailing input after term");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " at end of input"
                                               : " near '" + t.text + "'"),
                     t.line, t.column);
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    next();
  }

  void expect_keyword(const char* kw) {
    if (!at(Tok::Ident) || peek().text != kw) {
      fail(std::string("expected '") + kw + "'");
    }
    next();
  }

  std::string ident(const char* what) {
    if (!at(Tok::Ident) || reserved(peek().text)) {
      fail(std::string("expected ") + what);
    }
    return next().text;
  }

  SortId sort_ref(const Signature& sig) {
    const Token& t = peek();
    std::string name = ident("sort name");
    auto s = sig.find_sort(name);
    if (!s) throw ParseError("unknown sort '" + name + "'", t.line, t.column);
    return *s;
  }

  void op_decl(Signature& sig) {
    const Token& start = peek();
    std::string name = ident("operation name");
    expect(Tok::Colon, "':'");
    std::vector<SortId> args;
    if (!at(Tok::Arrow)) {
      args.push_back(sort_ref(sig));
      while (at(Tok::Comma)) {
        next();
        args.push_back(sort_ref(sig));
      }
    }
    expect(Tok::Arrow, "'->'");
    SortId result = sort_ref(sig);
    expect(Tok::Semi, "';'");
    try {
      sig.add_op(std::move(name), std::move(args), result);
    } catch (const SortError& e) {
      throw ParseError(e.what(), start.line, start.column);
    }
  }

  Sequent axiom(const Signature& sig) {
    Sequent s;
    if (at(Tok::Ident) && peek().text == "forall") {
      next();
      do {
        if (!s.context.empty()) next();  // comma
        const Token& vt = peek();
        std::string v = ident("variable name");
        if (sig.find_op(v) && sig.op(*sig.find_op(v)).arity() == 0) {
          throw ParseError("variable '" + v + "' shadows a constant", vt.line,
                           vt.column);
        }
        for (const TypedVar& prev : s.context) {
          if (prev.name == v) {
            throw ParseError("variable '" + v + "' declared twice", vt.line,
                             vt.column);
          }
        }
        expect(Tok::Colon, "':'");
        s.context.push_back(TypedVar{std::move(v), sort_ref(sig)});
      } while (at(Tok::Comma));
      if (at(Tok::Dot)) next();
    }
    if (!at(Tok::Turnstile)) s.premise = formula(sig, s.context);
    expect(Tok::Turnstile, "'|-'");
    s.conclusion = formula(sig, s.context);
    expect(Tok::Semi, "';'");
    return s;
  }

  HornFormula formula(const Signature& sig, const VarContext& ctx) {
    HornFormula f;
    if (at(Tok::Ident) && peek().text == "true") {
      next();
      return f;
    }
    f.conjuncts.push_back(atom(sig, ctx));
    while (at(Tok::Comma)) {
      next();
      f.conjuncts.push_back(atom(sig, ctx));
    }
    return f;
  }

  Equation atom(const Signature& sig, const VarContext& ctx) {
    if (at(Tok::Ident) && peek().text == "def" && peek(1).kind == Tok::LParen) {
      next();
      next();
      Term t = term(sig, ctx);
      expect(Tok::RParen, "')'");
      return defined(t);
    }
    const Token& start = peek();
    Term l = term(sig, ctx);
    expect(Tok::Equals, "'='");
    Term r = term(sig, ctx);
    const SortId ls = sort_of(sig, l);
    const SortId rs = sort_of(sig, r);
    if (ls != rs) {
      throw SortError(std::to_string(start.line) + ":" +
                      std::to_string(start.column) +
                      ": sort error: equation '" + print_term(sig, l) + " = " +
                      print_term(sig, r) + "' relates sorts '" +
                      sig.sort(ls).name + "' and '" + sig.sort(rs).name + "'");
    }
    return Equation{std::move(l), std::move(r)};
  }

  Term term(const Signature& sig, const VarContext& ctx) {
    const Token& start = peek();
    if (!at(Tok::Ident) || reserved(peek().text)) fail("expected a term");
    std::string name = next().text;
    if (at(Tok::LParen)) {
      next();
      auto op = sig.find_op(name);
      if (!op) {
        throw ParseError("unknown operation '" + name + "'", start.line,
                         start.column);
      }
      std::vector<Term> args;
      if (!at(Tok::RParen)) {
        args.push_back(term(sig, ctx));
        while (at(Tok::Comma)) {
          next();
          args.push_back(term(sig, ctx));
        }
      }
      expect(Tok::RParen, "')'");
      Term t = Term::apply(*op, std::move(args));
      checked(sig, t, start);
      return t;
    }
    for (const TypedVar& v : ctx) {
      if (v.name == name) return Term::variable(v.name, v.sort);
    }
    if (auto op = sig.find_op(name)) {
      Term t = Term::apply(*op);
      checked(sig, t, start);
      return t;
    }
    throw ParseError("unknown identifier '" + name + "'", start.line,
                     start.column);
  }

  static void checked(const Signature& sig, const Term& t, const Token& at) {
    try {
      sort_of(sig, t);
    } catch (const SortError& e) {
      throw SortError(std::to_string(at.line) + ":" + std::to_string(at.column) +
                      ": sort error in '" + print_term(sig, t) + "': " + e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_equation(std::ostream& os, const Signature& sig, const Equation& e) {
  if (is_definedness(e)) {
    os << "def(" << print_term(sig, e.lhs) << ")";
  } else {
    os << print_term(sig, e.lhs) << " = " << print_term(sig, e.rhs);
  }
}

void print_term_to(std::ostream& os, const Signature& sig, const Term& t) {
  if (t.is_variable()) {
    os << t.var().name;
    return;
  }
  os << sig.op(t.op()).name;
  if (t.args().empty()) return;
  os << '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i > 0) os << ", ";
    print_term_to(os, sig, t.args()[i]);
  }
  os << ')';
}

}  // namespace

Theory parse_theory(std::string_view source) {
  Parser p(source);
  Theory th = p.theory();
  validate_theory(th);
  return th;
}

Term parse_term(std::string_view text, const Signature& sig,
                const VarContext& context) {
  Parser p(text);
  return p.single_term(sig, context);
}

std::string print_term(const Signature& sig, const Term& t) {
  std::ostringstream os;
  print_term_to(os, sig, t);
  return os.str();
}

std::string print_formula(const Signature& sig, const HornFormula& f) {
  if (f.is_top()) return "true";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.conjuncts.size(); ++i) {
    if (i > 0) os << ", ";
    print_equation(os, sig, f.conjuncts[i]);
  }
  return os.str();
}

std::string print_sequent(const Signature& sig, const Sequent& s) {
  std::ostringstream os;
  if (!s.context.empty()) {
    os << "forall ";
    for (std::size_t i = 0; i < s.context.size(); ++i) {
      if (i > 0) os << ", ";
      os << s.context[i].name << ':' << sig.sort(s.context[i].sort).name;
    }
    os << (s.premise.is_top() ? " " : ". ");
  }
  if (!s.premise.is_top()) os << print_formula(sig, s.premise) << ' ';
  os << "|- " << print_formula(sig, s.conclusion);
  return os.str();
}

std::string print_theory(const Theory& theory) {
  const Signature& sig = theory.signature;
  std::ostringstream os;
  os << "theory " << theory.name << "\n\n";
  for (const Sort& s : sig.sorts()) os << "sort " << s.name << ";\n";
  os << '\n';
  for (const OpSymbol& op : sig.ops()) {
    os << "op " << op.name << " :";
    for (std::size_t i = 0; i < op.arg_sorts.size(); ++i) {
      os << (i == 0 ? " " : ", ") << sig.sort(op.arg_sorts[i]).name;
    }
    os << " -> " << sig.sort(op.result_sort).name << ";\n";
  }
  if (!theory.axioms.empty()) os << '\n';
  for (const Sequent& ax : theory.axioms) {
    os << "axiom " << print_sequent(sig, ax) << ";\n";
  }
  return os.str();
}

}  // namespace isolab::phl
