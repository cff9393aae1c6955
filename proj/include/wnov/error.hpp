#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wnov {

  // Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Arithmetic between scalars of different fields.
  class FieldMismatch : public Error {
   public:
    using Error::Error;
  };

  // Requested multidegree exceeds the configured oracle cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t position, std::string const& message)
        : Error("parse error at position " + std::to_string(position) + ": "
                + message),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

}  // namespace wnov
