#include "wnov/parser.hpp"

#include <cctype>
#include <string>

#include "wnov/error.hpp"
#include "wnov/evaluate.hpp"
#include "wnov/sugar.hpp"

namespace wnov {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      MagmaPoly parse_all() {
        auto p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
          fail(text_[pos_] == '*'
                   ? "a product takes exactly two parenthesized operands"
                   : "unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
      }

      // "<expr> [= <expr>]", returning lhs - rhs.
      MagmaPoly parse_equation() {
        auto p = expr();
        if (accept('=')) {
          p -= expr();
        }
        skip_ws();
        if (pos_ != text_.size()) {
          fail(text_[pos_] == '=' ? "more than one '='"
                                  : "unexpected '" + std::string(1, text_[pos_])
                                        + "'");
        }
        return p;
      }

     private:
      [[noreturn]] void fail(std::string const& message) const {
        throw ParseError(pos_, message);
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
      }

      bool accept(char c) {
        if (peek(c)) {
          ++pos_;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      bool peek_digit() {
        skip_ws();
        return pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]));
      }

      mpz_class integer() {
        if (!peek_digit()) {
          fail("expected an integer");
        }
        auto start = pos_;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
      }

      std::uint32_t index_after_letter() {
        // No whitespace between the letter and its index.
        if (pos_ >= text_.size()
            || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an index");
        }
        auto n = integer();
        if (n < 1 || n > 1000000) {
          fail("index out of range");
        }
        return static_cast<std::uint32_t>(n.get_ui());
      }

      MagmaPoly expr() {
        auto p = term();
        while (true) {
          if (accept('+')) {
            p += term();
          } else if (accept('-')) {
            p -= term();
          } else {
            return p;
          }
        }
      }

      MagmaPoly term() {
        mpq_class coeff    = 1;
        bool      negative = accept('-');
        bool      has_rat  = false;
        if (peek_digit()) {
          has_rat        = true;
          mpz_class num  = integer();
          mpz_class den  = 1;
          if (accept('/')) {
            den = integer();
            if (den == 0) {
              fail("zero denominator");
            }
          }
          coeff = mpq_class(num, den);
          coeff.canonicalize();
        }
        if (negative) {
          coeff = -coeff;
        }
        skip_ws();
        if (has_rat && (pos_ == text_.size() || peek('+') || peek('-')
                        || peek(')') || peek(',') || peek('='))) {
          if (coeff != 0) {
            fail("a constant term is not an algebra element");
          }
          return MagmaPoly(Field::rationals());
        }
        auto p = factor();
        if (accept('*')) {
          p = magma_mul(p, factor());
        }
        return p * Scalar(Field::rationals(), coeff);
      }

      MagmaPoly factor() {
        skip_ws();
        if (pos_ >= text_.size()) {
          fail("unexpected end of input");
        }
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          auto p = expr();
          if (accept('*')) {
            p = magma_mul(p, expr());
          }
          if (peek('*')) {
            fail("a product takes exactly two operands; add parentheses");
          }
          expect(')');
          return p;
        }
        if (c == 'x' || c == 'v') {
          ++pos_;
          auto k = index_after_letter();
          return c == 'x' ? generator_poly(gen(k)) : variable_poly(var(k));
        }
        Sugar s;
        switch (c) {
          case 'A':
            s = Sugar::associator;
            break;
          case 'C':
            s = Sugar::commutator;
            break;
          case 'O':
            s = Sugar::circle;
            break;
          case 'T':
            s = Sugar::tch;
            break;
          default:
            fail("unexpected '" + std::string(1, c) + "'");
        }
        ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != '(') {
          fail("expected '(' after " + std::string(sugar_name(s)));
        }
        ++pos_;
        std::vector<MagmaPoly> args{expr()};
        while (accept(',')) {
          args.push_back(expr());
        }
        if (args.size() != arity(s)) {
          fail(std::string(sugar_name(s)) + " expects "
               + std::to_string(arity(s)) + " arguments, got "
               + std::to_string(args.size()));
        }
        expect(')');
        return expand_sugar(s, args);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  MagmaPoly parse_expr(std::string_view text) {
    return Parser(text).parse_all();
  }

  MagmaPoly parse_generator_expr(std::string_view text) {
    auto p = parse_expr(text);
    if (has_variables(p)) {
      throw ParseError(0, "formal variables v_k are not allowed here; use "
                          "generators x_k");
    }
    return p;
  }

  MagmaPoly parse_identity(std::string_view text) {
    auto f = Parser(text).parse_equation();
    if (has_generators(f)) {
      throw ParseError(0, "identities use the variables v_k only; found a "
                          "generator x_k");
    }
    return f;
  }

  OperatorWord parse_operator_word(std::string const& text) {
    OperatorWord out;
    std::size_t  i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      OperatorLetter::Kind kind;
      if (text.compare(i, 2, "Th") == 0) {
        kind = OperatorLetter::Kind::Theta;
        i += 2;
      } else if (text[i] == 'L' || text[i] == 'R' || text[i] == 'H') {
        kind = text[i] == 'L'   ? OperatorLetter::Kind::L
               : text[i] == 'R' ? OperatorLetter::Kind::R
                                : OperatorLetter::Kind::H;
        ++i;
      } else {
        throw ParseError(i, "expected L, R, H or Th");
      }
      if (i < text.size() && text[i] == 'x') {
        ++i;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (start == i) {
        throw ParseError(i, "expected a generator index");
      }
      auto k = std::stoul(text.substr(start, i - start));
      if (k == 0) {
        throw ParseError(start, "generator indices start at 1");
      }
      out.push_back({kind, gen(static_cast<std::uint32_t>(k))});
    }
    return out;
  }

}  // namespace wnov
