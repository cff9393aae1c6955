#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wnov/linear_combination.hpp"
#include "wnov/scalar.hpp"

namespace wnov {

  // Generator x_k of the free algebra, k >= 1.
  enum class GeneratorId : std::uint32_t {};
  // Formal identity variable v_k, k >= 1. Disjoint from generators.
  enum class VariableId : std::uint32_t {};

  constexpr GeneratorId gen(std::uint32_t k) noexcept {
    return GeneratorId{k};
  }
  constexpr VariableId var(std::uint32_t k) noexcept {
    return VariableId{k};
  }
  constexpr std::uint32_t index(GeneratorId g) noexcept {
    return static_cast<std::uint32_t>(g);
  }
  constexpr std::uint32_t index(VariableId v) noexcept {
    return static_cast<std::uint32_t>(v);
  }

  // A nonassociative word: a full binary tree whose leaves are generators or
  // variables. Stored as its preorder token sequence: 0 marks a product
  // node, k > 0 the generator x_k, -k the variable v_k.
  class MagmaWord {
   public:
    using token_type = std::int32_t;

    static MagmaWord generator(GeneratorId g);
    static MagmaWord variable(VariableId v);
    // No validation; tokens must form a well-formed preorder.
    static MagmaWord from_tokens(std::vector<token_type> tokens);

    friend MagmaWord operator*(MagmaWord const& a, MagmaWord const& b);

    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }
    [[nodiscard]] bool is_leaf() const noexcept {
      return tokens_.size() == 1;
    }
    [[nodiscard]] bool is_generator() const noexcept {
      return is_leaf() && tokens_[0] > 0;
    }
    [[nodiscard]] bool is_variable() const noexcept {
      return is_leaf() && tokens_[0] < 0;
    }
    [[nodiscard]] GeneratorId as_generator() const;
    [[nodiscard]] VariableId  as_variable() const;
    [[nodiscard]] MagmaWord   left() const;
    [[nodiscard]] MagmaWord   right() const;
    [[nodiscard]] std::vector<token_type> const& tokens() const noexcept {
      return tokens_;
    }
    // Leaf tokens in left-to-right order.
    [[nodiscard]] std::vector<token_type> leaves() const;

    // Order: degree, then shape in preorder (product before leaf), then the
    // leaf sequence (generators before variables, each by index).
    friend std::strong_ordering operator<=>(MagmaWord const& a,
                                            MagmaWord const& b);
    friend bool operator==(MagmaWord const& a, MagmaWord const& b) {
      return a.tokens_ == b.tokens_;
    }

   private:
    std::vector<token_type> tokens_;
    std::size_t             degree_ = 0;
  };

  struct MagmaWordHash {
    std::size_t operator()(MagmaWord const& w) const noexcept;
    std::size_t operator()(std::vector<MagmaWord::token_type> const& t) const
        noexcept;
  };

  // Map generator -> multiplicity (>= 1); total degree is the sum.
  class Multidegree {
   public:
    Multidegree() = default;
    explicit Multidegree(std::map<GeneratorId, unsigned> counts);
    // counts[i] is the multiplicity of x_{i+1}; zero entries are dropped.
    static Multidegree from_counts(std::vector<unsigned> const& counts);
    // Parses "a,b,c,..." as multiplicities of x1, x2, x3, ...
    static Multidegree parse(std::string const& text);
    static Multidegree multilinear(unsigned n);
    // Generators only; variables are ignored.
    static Multidegree of(MagmaWord const& w);

    [[nodiscard]] unsigned total() const noexcept;
    [[nodiscard]] bool     is_multilinear() const noexcept;
    [[nodiscard]] std::map<GeneratorId, unsigned> const& counts() const
        noexcept {
      return counts_;
    }
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(Multidegree const&, Multidegree const&) = default;

   private:
    std::map<GeneratorId, unsigned> counts_;
  };

  using MagmaPoly = LinearCombination<MagmaWord>;

  MagmaPoly generator_poly(GeneratorId g, Field field = Field::rationals());
  MagmaPoly variable_poly(VariableId v, Field field = Field::rationals());

  // Bilinear extension of the tree-join product.
  MagmaPoly magma_mul(MagmaPoly const& a, MagmaPoly const& b);

  // Simultaneous substitution of variables; throws on an unassigned variable.
  MagmaPoly substitute(MagmaPoly const&                      f,
                       std::map<VariableId, MagmaPoly> const& assignment);

  // Every word of the multidegree (all bracketings, all leaf arrangements),
  // sorted in word order.
  std::vector<MagmaWord> enumerate_words(Multidegree const& md);

  // Same, over arbitrary leaf tokens with multiplicities. Deterministic
  // order (sorted by token sequence within the word order of shapes).
  std::vector<std::vector<MagmaWord::token_type>> enumerate_token_words(
      std::vector<std::pair<MagmaWord::token_type, unsigned>> const& letters);

  // Variables occurring in f, with their degree in each term; nullopt if f
  // is not multihomogeneous in its variables.
  std::optional<std::map<VariableId, unsigned>> variable_degrees(
      MagmaPoly const& f);
  // Multidegree in the generators when every term shares it.
  std::optional<Multidegree> generator_multidegree(MagmaPoly const& f);
  bool has_variables(MagmaPoly const& f);
  bool has_generators(MagmaPoly const& f);

  unsigned long long catalan(unsigned n);

}  // namespace wnov
