#include "instanton/parser.hpp"

#include <cctype>
#include <sstream>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

struct Token {
  enum class Kind { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& src, VarSet vars) : src_(src), vars_(vars) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at line " << at.line << ", column " << at.col << ": " << msg;
    throw Error(ErrorKind::SyntaxError, os.str());
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      bump();
    }
    tok_ = Token{Token::Kind::End, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        size_t save = pos_;
        int saveLine = line_, saveCol = col_;
        bump();
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
        } else {
          pos_ = save;
          line_ = saveLine;
          col_ = saveCol;
        }
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::Var;
      tok_.text = std::string(1, c);
      bump();
      return;
    }
    switch (c) {
      case '+': tok_.kind = Token::Kind::Plus; break;
      case '-': tok_.kind = Token::Kind::Minus; break;
      case '*': tok_.kind = Token::Kind::Star; break;
      case '^': tok_.kind = Token::Kind::Caret; break;
      case '(': tok_.kind = Token::Kind::LParen; break;
      case ')': tok_.kind = Token::Kind::RParen; break;
      default: {
        std::ostringstream os;
        os << "syntax error at line " << line_ << ", column " << col_
           << ": unexpected character '" << c << "'";
        throw Error(ErrorKind::SyntaxError, os.str());
      }
    }
    tok_.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string src_;
  VarSet vars_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

using Node = std::shared_ptr<PolyExpr>;

Node mk(PolyExpr e) { return std::make_shared<PolyExpr>(std::move(e)); }

class Parser {
 public:
  Parser(const std::string& src, VarSet vars) : lex_(src, vars), vars_(vars) {}

  PolyExpr run() {
    PolyExpr e = expr();
    if (lex_.peek().kind != Token::Kind::End) {
      lex_.fail(lex_.peek(), "unexpected trailing input '" + lex_.peek().text + "'");
    }
    return e;
  }

 private:
  PolyExpr expr() {
    PolyExpr acc;
    if (lex_.peek().kind == Token::Kind::Minus) {
      Token t = lex_.take();
      (void)t;
      PolyExpr first = term();
      acc.kind = PolyExpr::Kind::Neg;
      acc.lhs = mk(std::move(first));
    } else {
      acc = term();
    }
    while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
      bool plus = lex_.take().kind == Token::Kind::Plus;
      PolyExpr rhs = term();
      PolyExpr next;
      next.kind = plus ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub;
      next.lhs = mk(std::move(acc));
      next.rhs = mk(std::move(rhs));
      acc = std::move(next);
    }
    return acc;
  }

  PolyExpr term() {
    PolyExpr acc = factor();
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.take();
      PolyExpr rhs = factor();
      PolyExpr next;
      next.kind = PolyExpr::Kind::Mul;
      next.lhs = mk(std::move(acc));
      next.rhs = mk(std::move(rhs));
      acc = std::move(next);
    }
    // a variable or number directly after a factor means implicit
    // multiplication, which the grammar rejects
    if (lex_.peek().kind == Token::Kind::Var || lex_.peek().kind == Token::Kind::Number ||
        lex_.peek().kind == Token::Kind::LParen) {
      lex_.fail(lex_.peek(), "implicit multiplication is not allowed; write '*'");
    }
    return acc;
  }

  PolyExpr factor() {
    PolyExpr b = base();
    if (lex_.peek().kind == Token::Kind::Caret) {
      lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Kind::Number || e.text.find('/') != std::string::npos) {
        lex_.fail(e, "exponent must be a nonnegative integer");
      }
      PolyExpr p;
      p.kind = PolyExpr::Kind::Pow;
      p.lhs = mk(std::move(b));
      try {
        p.exponent = std::stol(e.text);
      } catch (const std::out_of_range&) {
        lex_.fail(e, "exponent out of range");
      }
      return p;
    }
    return b;
  }

  PolyExpr base() {
    Token t = lex_.take();
    PolyExpr e;
    switch (t.kind) {
      case Token::Kind::Number:
        e.kind = PolyExpr::Kind::Number;
        e.value = Rational::fromString(t.text);
        return e;
      case Token::Kind::Var: {
        const char* names = (vars_ == VarSet::xy) ? "xy" : "zu";
        if (t.text[0] == names[0]) {
          e.var = 0;
        } else if (t.text[0] == names[1]) {
          e.var = 1;
        } else {
          std::ostringstream os;
          os << "unknown variable '" << t.text << "' at line " << t.line << ", column "
             << t.col << " (expected " << names[0] << " or " << names[1] << ")";
          throw Error(ErrorKind::UnknownVariable, os.str());
        }
        e.kind = PolyExpr::Kind::Variable;
        return e;
      }
      case Token::Kind::LParen: {
        e = expr();
        Token close = lex_.take();
        if (close.kind != Token::Kind::RParen) lex_.fail(close, "expected ')'");
        return e;
      }
      default:
        lex_.fail(t, "expected a number, variable or '('");
    }
  }

  Lexer lex_;
  VarSet vars_;
};

}  // namespace

LaurentPoly PolyExpr::evaluate() const {
  switch (kind) {
    case Kind::Number:
      return LaurentPoly::constant(value);
    case Kind::Variable:
      return var == 0 ? LaurentPoly::monomial(1, 0) : LaurentPoly::monomial(0, 1);
    case Kind::Add:
      return lhs->evaluate() + rhs->evaluate();
    case Kind::Sub:
      return lhs->evaluate() - rhs->evaluate();
    case Kind::Mul:
      return lhs->evaluate() * rhs->evaluate();
    case Kind::Neg:
      return -lhs->evaluate();
    case Kind::Pow: {
      LaurentPoly acc = LaurentPoly::constant(Rational(1));
      LaurentPoly b = lhs->evaluate();
      for (long k = 0; k < exponent; ++k) acc = acc * b;
      return acc;
    }
  }
  return {};
}

std::string PolyExpr::print(VarSet vars) const {
  const char* names = (vars == VarSet::xy) ? "xy" : "zu";
  switch (kind) {
    case Kind::Number:
      return value.pretty();
    case Kind::Variable:
      return std::string(1, names[var]);
    case Kind::Add:
      return "(" + lhs->print(vars) + " + " + rhs->print(vars) + ")";
    case Kind::Sub:
      return "(" + lhs->print(vars) + " - " + rhs->print(vars) + ")";
    case Kind::Mul:
      return "(" + lhs->print(vars) + " * " + rhs->print(vars) + ")";
    case Kind::Neg:
      return "(- " + lhs->print(vars) + ")";
    case Kind::Pow:
      return lhs->print(vars) + "^" + std::to_string(exponent);
  }
  return "";
}

PolyExpr parsePoly(const std::string& src, VarSet vars) { return Parser(src, vars).run(); }

LaurentPoly parsePolynomial(const std::string& src, VarSet vars) {
  return parsePoly(src, vars).evaluate();
}

}  // namespace instanton
