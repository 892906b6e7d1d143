#include "adelic/parse.hpp"

#include <cctype>
#include <optional>

#include "adelic/error.hpp"

namespace adelic {

namespace {

enum class Tok { Num, Var, Diff, Op, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  int index = -1;  // variable index for Var/Diff
};

std::vector<Token> tokenize(const std::string& s, const Vars& vars) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto var_index = [&](const std::string& name) {
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars[j] == name) return static_cast<int>(j);
    return -1;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string name = s.substr(i, j - i);
      int v = var_index(name);
      if (v >= 0) {
        out.push_back({Tok::Var, name, i, v});
      } else if (name.size() > 1 && name[0] == 'd' && var_index(name.substr(1)) >= 0) {
        out.push_back({Tok::Diff, name, i, var_index(name.substr(1))});
      } else {
        throw ParseError("unknown symbol '" + name + "'", i);
      }
      i = j;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::LParen, "(", i});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Tok::Op, std::string(1, c), i});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// A parsed value: a form, plus a factorization when it is a product of atoms.
struct Value {
  Form form;
  std::optional<std::pair<Scalar, std::vector<DenFactor>>> factored;
};

class Parser {
 public:
  Parser(const std::string& text, const Vars& vars, const BaseField& k)
      : toks_(tokenize(text, vars)), vars_(vars), k_(k) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept_op(char c) {
    if (peek().kind == Tok::Op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc constant(const Scalar& c) const { return RatFunc::constant(c, vars_, k_); }

  Value from_poly(const Poly& p) const {
    Value v{Form::function(RatFunc(p)), std::nullopt};
    return v;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept_op('+')) {
        v = add(v, term(), false);
      } else if (accept_op('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value add(const Value& a, const Value& b, bool negate) {
    Value r{negate ? a.form - b.form : a.form + b.form, std::nullopt};
    return r;
  }

  Value term() {
    Value v = unary();
    while (true) {
      std::size_t at = peek().pos;
      if (accept_op('*')) {
        v = mul(v, unary(), at);
      } else if (accept_op('/')) {
        v = divide(v, unary(), at);
      } else if (peek().kind == Tok::Diff) {
        v = mul(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value mul(const Value& a, const Value& b, std::size_t at) {
    if (a.form.degree() + b.form.degree() > static_cast<int>(vars_.size()))
      throw ParseError("form degree exceeds the dimension", at);
    Value r{wedge(a.form, b.form), std::nullopt};
    if (a.factored && b.factored) {
      auto f = a.factored->second;
      f.insert(f.end(), b.factored->second.begin(), b.factored->second.end());
      r.factored = std::make_pair(a.factored->first * b.factored->first, f);
    }
    return r;
  }

  std::pair<Scalar, std::vector<DenFactor>> factors_of(const Value& b, std::size_t at) const {
    if (b.form.degree() != 0) throw ParseError("division by a differential form", at);
    if (b.factored) return *b.factored;
    RatFunc f = b.form.coeff(0);
    if (f.is_zero()) throw ParseError("division by zero", at);
    if (!f.is_polynomial()) throw ParseError("denominator must be a product of factors", at);
    return factor_poly(f.num());
  }

  Value divide(const Value& a, const Value& b, std::size_t at) {
    auto [unit, factors] = factors_of(b, at);
    if (unit.is_zero()) throw ParseError("division by zero", at);
    RatFunc inv(Poly::constant(unit.inverse(), vars_, k_), factors);
    Value r{inv * a.form, std::nullopt};
    if (a.factored) {
      // Numerator factors stay factored only when nothing is divided.
      r.factored.reset();
    }
    return r;
  }

  Value unary() {
    if (accept_op('-')) {
      Value v = unary();
      Value r{-v.form, std::nullopt};
      if (v.factored) r.factored = std::make_pair(-v.factored->first, v.factored->second);
      return r;
    }
    return power();
  }

  Value power() {
    Value base = atom();
    while (peek().kind == Tok::Op && peek().text == "^") {
      std::size_t at = peek().pos;
      ++pos_;
      if (peek().kind == Tok::Diff) {
        base = mul(base, atom(), at);
        continue;
      }
      bool neg = accept_op('-');
      if (peek().kind != Tok::Num) throw ParseError("expected integer exponent", peek().pos);
      long e = std::stol(next().text);
      if (base.form.degree() != 0) throw ParseError("power of a differential", at);
      if (neg) {
        auto [unit, factors] = factors_of(base, at);
        for (auto& f : factors) f.mult *= static_cast<int>(e);
        RatFunc inv(Poly::constant(unit.pow(-e), vars_, k_), factors);
        base = Value{Form::function(inv), std::nullopt};
        continue;
      }
      Value r{Form::function(base.form.coeff(0).pow(static_cast<int>(e))), std::nullopt};
      if (base.factored) {
        auto f = base.factored->second;
        for (auto& x : f) x.mult *= static_cast<int>(e);
        r.factored = std::make_pair(base.factored->first.pow(e), f);
      }
      base = r;
    }
    return base;
  }

  Value atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Num: {
        Scalar c(mpq_class(mpz_class(t.text)), k_);
        Value v{Form::function(constant(c)), std::make_pair(c, std::vector<DenFactor>{})};
        return v;
      }
      case Tok::Var: {
        Poly p = Poly::variable(t.index, vars_, k_);
        Value v{Form::function(RatFunc(p)), std::make_pair(Scalar::one(k_), std::vector<DenFactor>{{p, 1}})};
        return v;
      }
      case Tok::Diff:
        return Value{Form::basis(1 << t.index, vars_, k_), std::nullopt};
      case Tok::LParen: {
        Value inner = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        ++pos_;
        if (!inner.factored && inner.form.degree() == 0) {
          RatFunc f = inner.form.coeff(0);
          if (f.is_polynomial() && !f.is_zero()) inner.factored = factor_poly(f.num());
        }
        return inner;
      }
      default:
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Vars vars_;
  BaseField k_;
};

}  // namespace

Form parse_form(const std::string& text, const Vars& vars, const BaseField& k) {
  return Parser(text, vars, k).parse().form;
}

RatFunc parse_ratfunc(const std::string& text, const Vars& vars, const BaseField& k) {
  Form f = parse_form(text, vars, k);
  if (f.degree() != 0) throw ParseError("expected a function, got a " + std::to_string(f.degree()) + "-form", 0);
  return f.coeff(0);
}

Poly parse_poly(const std::string& text, const Vars& vars, const BaseField& k) {
  RatFunc f = parse_ratfunc(text, vars, k);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return f.num();
}

}  // namespace adelic
