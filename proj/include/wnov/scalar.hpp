#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wnov {

  // Coefficient field: the rationals, or GF(p) for an odd prime p < 2^31.
  class Field {
   public:
    static Field rationals() noexcept {
      return Field(0);
    }
    static Field prime(std::uint64_t p);
    // Accepts "q" or "fp:<p>".
    static Field parse(std::string_view text);

    Field() noexcept = default;

    [[nodiscard]] bool is_rational() const noexcept {
      return p_ == 0;
    }
    [[nodiscard]] std::uint64_t characteristic() const noexcept {
      return p_;
    }
    [[nodiscard]] std::string name() const;

    friend bool operator==(Field, Field) = default;

   private:
    explicit Field(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_ = 0;
  };

  // An exact element of a Field. Mixing fields throws FieldMismatch.
  class Scalar {
   public:
    explicit Scalar(Field field = Field::rationals());
    Scalar(Field field, long value);
    Scalar(Field field, mpq_class const& value);

    static Scalar zero(Field field) {
      return Scalar(field);
    }
    static Scalar one(Field field) {
      return Scalar(field, 1L);
    }

    [[nodiscard]] Field field() const noexcept {
      return field_;
    }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    // Rational value; only valid over Q.
    [[nodiscard]] mpq_class const& rational() const;
    // Residue in [0, p); only valid over GF(p).
    [[nodiscard]] std::uint64_t residue() const;
    // Sign of the printed representative (GF(p) uses the symmetric range).
    [[nodiscard]] int sign() const;
    // Decimal text; GF(p) elements print in (-p/2, p/2).
    [[nodiscard]] std::string str() const;

    Scalar  operator-() const;
    Scalar& operator+=(Scalar const& other);
    Scalar& operator-=(Scalar const& other);
    Scalar& operator*=(Scalar const& other);
    Scalar& operator/=(Scalar const& other);

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }
    friend bool operator==(Scalar const& a, Scalar const& b);

   private:
    void check_same_field(Scalar const& other) const;

    Field         field_;
    mpq_class     q_;
    std::uint64_t r_ = 0;
  };

  std::ostream& operator<<(std::ostream& os, Scalar const& s);

  namespace modular {
    std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
    std::uint64_t reduce(mpz_class const& value, std::uint64_t p);
  }  // namespace modular

}  // namespace wnov
