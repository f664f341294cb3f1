/* Copyright 2026 The symlie Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include "symlie/parse.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symlie/errors.hpp"

namespace symlie {

namespace {

bool isNamedConstant(std::string_view id)
{
  return id.size() == 2 && id[0] == 'c' && id[1] >= '1' && id[1] <= '9';
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  Expr run()
  {
    skipSpace();
    if (atEnd()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skipSpace();
    if (!atEnd()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }

  void skipSpace()
  {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c)
  {
    skipSpace();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    skipSpace();
    if (peek() != c) {
      if (atEnd()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + peek() + "'", pos_);
    }
    ++pos_;
  }

  Expr expr()
  {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) terms.push_back(term());
      else if (accept('-')) terms.push_back(rawNeg(term()));
      else break;
    }
    return terms.size() == 1 ? terms.front() : rawSum(std::move(terms));
  }

  Expr term()
  {
    std::vector<Expr> factors{unary()};
    for (;;) {
      if (accept('*')) factors.push_back(unary());
      else if (accept('/')) factors.push_back(rawPower(unary(), Rational(-1)));
      else break;
    }
    return factors.size() == 1 ? factors.front() : rawProduct(std::move(factors));
  }

  Expr unary()
  {
    if (accept('-')) return rawNeg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power()
  {
    Expr base = primary();
    if (accept('^')) {
      skipSpace();
      const std::size_t at = pos_;
      Expr exponent = simplify(unary());
      if (!exponent.isRational()) throw ParseError("exponent must be a rational constant", at);
      return rawPower(std::move(base), exponent.rational());
    }
    return base;
  }

  Expr primary()
  {
    skipSpace();
    const std::size_t at = pos_;
    if (atEnd()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  Expr number()
  {
    const std::size_t at = pos_;
    std::int64_t mantissa = 0;
    std::int64_t scale = 0;
    bool digits = false;
    bool fraction = false;
    auto push = [&](char d) {
      if (mantissa > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError("numeric literal too long", at);
      mantissa = mantissa * 10 + (d - '0');
      if (fraction) ++scale;
      digits = true;
    };
    while (!atEnd()) {
      const char d = peek();
      if (std::isdigit(static_cast<unsigned char>(d))) push(d);
      else if (d == '.' && !fraction) fraction = true;
      else break;
      ++pos_;
    }
    if (!digits) throw ParseError("malformed number", at);
    std::int64_t exponent = 0;
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_++;
      int sign = 1;
      if (peek() == '+' || peek() == '-') sign = text_[pos_++] == '-' ? -1 : 1;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
      } else {
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          exponent = exponent * 10 + (text_[pos_++] - '0');
          if (exponent > 18) throw ParseError("numeric exponent out of range", at);
        }
        exponent *= sign;
      }
    }
    try {
      return Expr(Rational(mantissa) * Rational(10).pow(exponent - scale));
    } catch (const std::overflow_error&) {
      throw ParseError("numeric literal out of range", at);
    }
  }

  Expr identifier()
  {
    const std::size_t at = pos_;
    while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string id(text_.substr(at, pos_ - at));

    if (id == "exp" || id == "ln") {
      expect('(');
      Expr arg = expr();
      expect(')');
      return id == "exp" ? rawExp(std::move(arg)) : rawLn(std::move(arg));
    }
    if (opts_.functions.count(id)) return call(id);
    if (auto c = jetCoordFromName(id)) return rawVar(*c);
    if (auto it = opts_.aliases.find(id); it != opts_.aliases.end()) return rawVar(it->second);
    if (isNamedConstant(id)) return rawNamed(id);
    throw ParseError("unknown identifier '" + id + "'", at);
  }

  Expr call(const std::string& name)
  {
    std::vector<int> orders;
    if (accept('[')) {
      do {
        skipSpace();
        const std::size_t at = pos_;
        int v = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected derivative order", at);
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (text_[pos_++] - '0');
          if (v > 64) throw ParseError("derivative order too large", at);
        }
        orders.push_back(v);
      } while (accept(','));
      expect(']');
    }
    skipSpace();
    const std::size_t open = pos_;
    expect('(');
    std::vector<Expr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    if (!orders.empty() && orders.size() != args.size())
      throw ParseError("derivative orders of '" + name + "' do not match its arguments", open);
    return rawFunc(name, std::move(args), std::move(orders));
  }

  std::string_view text_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parseRaw(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

Expr parse(std::string_view text, const ParseOptions& opts) { return simplify(parseRaw(text, opts)); }

}  // namespace symlie
