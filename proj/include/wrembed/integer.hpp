#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrembed {

  // Exponents, shifts and conjugating powers. Encodings of x_i carry
  // s^{2^i - 1}, so fixed-width integers are not enough.
  using Int = boost::multiprecision::cpp_int;

  // Generator indices (x_i, b_i) and enumeration positions.
  using Index = std::uint64_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  inline bool is_power_of_two(Int const& v) {
    return v > 0 && boost::multiprecision::lsb(v) == boost::multiprecision::msb(v);
  }

  // Requires is_power_of_two(v).
  inline std::size_t log2_exact(Int const& v) {
    return static_cast<std::size_t>(boost::multiprecision::msb(v));
  }

  inline Int pow2(std::size_t e) {
    Int r = 1;
    r <<= e;
    return r;
  }

  // Smallest e >= 0 with 2^e >= v, for v >= 1.
  inline std::size_t ceil_log2(Int const& v) {
    if (v <= 1) {
      return 0;
    }
    std::size_t m = static_cast<std::size_t>(boost::multiprecision::msb(v));
    return is_power_of_two(v) ? m : m + 1;
  }

  inline Int abs(Int const& v) {
    return v < 0 ? Int(-v) : v;
  }

  inline std::string to_string(Int const& v) {
    return v.str();
  }

}  // namespace wrembed
