#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wnov/error.hpp"
#include "wnov/magma.hpp"

namespace wnov {

  // Bilinear extension of Algebra::multiply.
  template <typename Algebra>
  typename Algebra::Element multiply(typename Algebra::Element const& a,
                                     typename Algebra::Element const& b) {
    if (a.field() != b.field()) {
      throw FieldMismatch("multiplying elements over different fields");
    }
    typename Algebra::Element result(a.field());
    for (auto const& [u, cu] : a) {
      for (auto const& [w, cw] : b) {
        auto c = cu * cw;
        for (auto const& [e, ce] : Algebra::multiply(u, w, a.field())) {
          result.add_term(e, c * ce);
        }
      }
    }
    return result;
  }

  // Leaf valuation used when a word contains variables.
  template <typename Algebra>
  using LeafValue
      = std::function<typename Algebra::Element(MagmaWord::token_type)>;

  namespace detail {
    template <typename Algebra>
    typename Algebra::Element eval_tokens(
        std::vector<MagmaWord::token_type> const& t, std::size_t& pos,
        LeafValue<Algebra> const& leaf) {
      auto tok = t[pos++];
      if (tok != 0) {
        return leaf(tok);
      }
      auto left  = eval_tokens<Algebra>(t, pos, leaf);
      auto right = eval_tokens<Algebra>(t, pos, leaf);
      if (left.is_zero() || right.is_zero()) {
        return typename Algebra::Element(left.field());
      }
      return multiply<Algebra>(left, right);
    }
  }  // namespace detail

  template <typename Algebra>
  typename Algebra::Element evaluate(MagmaPoly const&          p,
                                     LeafValue<Algebra> const& leaf) {
    typename Algebra::Element result(p.field());
    for (auto const& [w, c] : p) {
      std::size_t pos = 0;
      result += detail::eval_tokens<Algebra>(w.tokens(), pos, leaf) * c;
    }
    return result;
  }

  // Bottom-up evaluation of a generator polynomial through the table.
  template <typename Algebra>
  typename Algebra::Element evaluate(MagmaPoly const& p) {
    auto field = p.field();
    return evaluate<Algebra>(
        p, [field](MagmaWord::token_type tok) -> typename Algebra::Element {
          if (tok < 0) {
            throw Error("cannot evaluate the formal variable v"
                        + std::to_string(-tok) + " in an algebra");
          }
          return Algebra::Element::basis(
              Algebra::generator(gen(static_cast<std::uint32_t>(tok))), field);
        });
  }

  // Operator letters: L_g, R_g, H_g = R_g - L_g, Theta_g = R_g + L_g.
  struct OperatorLetter {
    enum class Kind { L, R, H, Theta };
    Kind        kind;
    GeneratorId g;
  };
  using OperatorWord = std::vector<OperatorLetter>;

  // Parses e.g. "R3 R4 L5" or "H3 Th4" (Th = Theta); whitespace separated.
  OperatorWord parse_operator_word(std::string const& text);

  // Applies the operators left to right: e R_g = e.g, e L_g = g.e.
  template <typename Algebra>
  typename Algebra::Element operator_word_apply(
      typename Algebra::Element e, OperatorWord const& ops) {
    auto field = e.field();
    for (auto const& op : ops) {
      auto g     = Algebra::Element::basis(Algebra::generator(op.g), field);
      auto right = [&] { return multiply<Algebra>(e, g); };
      auto left  = [&] { return multiply<Algebra>(g, e); };
      switch (op.kind) {
        case OperatorLetter::Kind::R:
          e = right();
          break;
        case OperatorLetter::Kind::L:
          e = left();
          break;
        case OperatorLetter::Kind::H:
          e = right() - left();
          break;
        case OperatorLetter::Kind::Theta:
          e = right() + left();
          break;
      }
    }
    return e;
  }

}  // namespace wnov
