#pragma once

#include <map>
#include <utility>

#include "wnov/error.hpp"
#include "wnov/scalar.hpp"

namespace wnov {

  // Finite formal sum of keys with Scalar coefficients. Zero coefficients
  // are never stored; iteration follows the key order.
  template <typename Key>
  class LinearCombination {
   public:
    using map_type       = std::map<Key, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    explicit LinearCombination(Field field = Field::rationals())
        : field_(field) {}

    LinearCombination(Key const& key, Scalar const& coefficient)
        : field_(coefficient.field()) {
      add_term(key, coefficient);
    }

    static LinearCombination basis(Key const& key, Field field) {
      return LinearCombination(key, Scalar::one(field));
    }

    [[nodiscard]] Field field() const noexcept {
      return field_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return terms_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return terms_.size();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return terms_.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return terms_.end();
    }
    [[nodiscard]] map_type const& terms() const noexcept {
      return terms_;
    }

    [[nodiscard]] Scalar coefficient(Key const& key) const {
      auto it = terms_.find(key);
      return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    void add_term(Key const& key, Scalar const& coefficient) {
      if (coefficient.field() != field_) {
        throw FieldMismatch("coefficient field " + coefficient.field().name()
                            + " does not match " + field_.name());
      }
      if (coefficient.is_zero()) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(key, coefficient);
      if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
          terms_.erase(it);
        }
      }
    }

    LinearCombination& operator+=(LinearCombination const& other) {
      check_field(other);
      for (auto const& [key, c] : other.terms_) {
        add_term(key, c);
      }
      return *this;
    }

    LinearCombination& operator-=(LinearCombination const& other) {
      check_field(other);
      for (auto const& [key, c] : other.terms_) {
        add_term(key, -c);
      }
      return *this;
    }

    LinearCombination& operator*=(Scalar const& s) {
      if (s.field() != field_) {
        throw FieldMismatch("scaling by a scalar of another field");
      }
      if (s.is_zero()) {
        terms_.clear();
        return *this;
      }
      for (auto& [key, c] : terms_) {
        c *= s;
      }
      return *this;
    }

    LinearCombination operator-() const {
      LinearCombination result(*this);
      for (auto& [key, c] : result.terms_) {
        c = -c;
      }
      return result;
    }

    friend LinearCombination operator+(LinearCombination a,
                                       LinearCombination const& b) {
      return a += b;
    }
    friend LinearCombination operator-(LinearCombination a,
                                       LinearCombination const& b) {
      return a -= b;
    }
    friend LinearCombination operator*(LinearCombination a, Scalar const& s) {
      return a *= s;
    }
    friend LinearCombination operator*(Scalar const& s, LinearCombination a) {
      return a *= s;
    }
    friend bool operator==(LinearCombination const& a,
                           LinearCombination const& b) {
      return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

   private:
    void check_field(LinearCombination const& other) const {
      if (other.field_ != field_) {
        throw FieldMismatch("adding combinations over " + field_.name()
                            + " and " + other.field_.name());
      }
    }

    Field    field_;
    map_type terms_;
  };

  // Re-reads rational coefficients in another field; a GF(p) source may only
  // be "converted" to itself.
  template <typename Key>
  LinearCombination<Key> change_field(LinearCombination<Key> const& lc,
                                      Field                         field) {
    if (lc.field() == field) {
      return lc;
    }
    if (!lc.field().is_rational()) {
      throw FieldMismatch("cannot move coefficients from " + lc.field().name()
                          + " to " + field.name());
    }
    LinearCombination<Key> result(field);
    for (auto const& [key, c] : lc) {
      result.add_term(key, Scalar(field, c.rational()));
    }
    return result;
  }

}  // namespace wnov
