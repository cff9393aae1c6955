#include "wnov/scalar.hpp"

#include <charconv>
#include <ostream>

#include "wnov/error.hpp"

namespace wnov {

  namespace {
    bool is_prime(std::uint64_t n) {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Field Field::prime(std::uint64_t p) {
    if (p == 2) {
      throw Error("characteristic 2 is not supported (division by 2 is "
                  "required)");
    }
    if (!is_prime(p)) {
      throw Error("fp:" + std::to_string(p) + " is not a prime field");
    }
    if (p >= (std::uint64_t(1) << 31)) {
      throw Error("prime modulus must be below 2^31");
    }
    return Field(p);
  }

  Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") {
      return rationals();
    }
    if (text.starts_with("fp:")) {
      auto          digits = text.substr(3);
      std::uint64_t p      = 0;
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || digits.empty()) {
        throw Error("malformed field '" + std::string(text) + "'");
      }
      return prime(p);
    }
    throw Error("unknown field '" + std::string(text)
                + "' (expected q or fp:<p>)");
  }

  std::string Field::name() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p_);
  }

  namespace modular {
    std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
      // Fermat; p is prime and a != 0.
      std::uint64_t result = 1, base = a % p, e = p - 2;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return result;
    }

    std::uint64_t reduce(mpz_class const& value, std::uint64_t p) {
      mpz_class m = value % mpz_class(static_cast<unsigned long>(p));
      if (m < 0) {
        m += static_cast<unsigned long>(p);
      }
      return m.get_ui();
    }
  }  // namespace modular

  Scalar::Scalar(Field field) : field_(field) {}

  Scalar::Scalar(Field field, long value) : field_(field) {
    if (field.is_rational()) {
      q_ = value;
    } else {
      r_ = modular::reduce(mpz_class(value), field.characteristic());
    }
  }

  Scalar::Scalar(Field field, mpq_class const& value) : field_(field) {
    if (field.is_rational()) {
      q_ = value;
      q_.canonicalize();
      return;
    }
    auto p   = field.characteristic();
    auto den = modular::reduce(value.get_den(), p);
    if (den == 0) {
      throw Error("coefficient " + value.get_str()
                  + " has a denominator divisible by " + std::to_string(p));
    }
    r_ = modular::reduce(value.get_num(), p) * modular::inverse(den, p) % p;
  }

  bool Scalar::is_zero() const noexcept {
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
  }

  bool Scalar::is_one() const noexcept {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
  }

  mpq_class const& Scalar::rational() const {
    if (!field_.is_rational()) {
      throw FieldMismatch("rational() called on a GF(p) scalar");
    }
    return q_;
  }

  std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) {
      throw FieldMismatch("residue() called on a rational scalar");
    }
    return r_;
  }

  int Scalar::sign() const {
    if (field_.is_rational()) {
      return sgn(q_);
    }
    if (r_ == 0) {
      return 0;
    }
    return r_ <= field_.characteristic() / 2 ? 1 : -1;
  }

  std::string Scalar::str() const {
    if (field_.is_rational()) {
      return q_.get_str();
    }
    auto p = field_.characteristic();
    if (r_ <= p / 2) {
      return std::to_string(r_);
    }
    return "-" + std::to_string(p - r_);
  }

  void Scalar::check_same_field(Scalar const& other) const {
    if (field_ != other.field_) {
      throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs "
                          + other.field_.name());
    }
  }

  Scalar Scalar::operator-() const {
    Scalar result(field_);
    if (field_.is_rational()) {
      result.q_ = -q_;
    } else {
      result.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    }
    return result;
  }

  Scalar& Scalar::operator+=(Scalar const& other) {
    check_same_field(other);
    if (field_.is_rational()) {
      q_ += other.q_;
    } else {
      r_ = (r_ + other.r_) % field_.characteristic();
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& other) {
    return *this += -other;
  }

  Scalar& Scalar::operator*=(Scalar const& other) {
    check_same_field(other);
    if (field_.is_rational()) {
      q_ *= other.q_;
    } else {
      r_ = r_ * other.r_ % field_.characteristic();
    }
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& other) {
    check_same_field(other);
    if (other.is_zero()) {
      throw Error("division by zero");
    }
    if (field_.is_rational()) {
      q_ /= other.q_;
    } else {
      auto p = field_.characteristic();
      r_     = r_ * modular::inverse(other.r_, p) % p;
    }
    return *this;
  }

  bool operator==(Scalar const& a, Scalar const& b) {
    if (a.field_ != b.field_) {
      return false;
    }
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& s) {
    return os << s.str();
  }

}  // namespace wnov
