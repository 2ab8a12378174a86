#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiver/error.hpp"

namespace quiver {

// Expression templates off: results feed template deduction all over.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

//! Integers modulo a prime P < 2^31.
template <std::uint32_t P>
class ModInt {
  static_assert(P >= 2 && P < (1u << 31), "modulus must fit in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModInt() = default;
  constexpr ModInt(long long v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  [[nodiscard]] constexpr std::uint32_t value() const { return v_; }

  constexpr ModInt& operator+=(ModInt o) {
    v_ = (v_ + o.v_) % P;
    return *this;
  }
  constexpr ModInt& operator-=(ModInt o) {
    v_ = (v_ + P - o.v_) % P;
    return *this;
  }
  constexpr ModInt& operator*=(ModInt o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  friend constexpr ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend constexpr ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  friend constexpr ModInt operator-(ModInt a) { return ModInt() - a; }
  friend constexpr bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ModInt a, ModInt b) { return a.v_ != b.v_; }

  [[nodiscard]] ModInt pow(std::uint64_t e) const {
    ModInt base = *this, r = 1;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  [[nodiscard]] ModInt inverse() const {
    if (v_ == 0) fail(ErrorCode::InvalidRange, "division by zero in GF(p)");
    return pow(P - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, ModInt a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

//! Parsing and printing hooks for coefficient fields.
template <class Field>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational parse(const std::string& s) {
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(BigInt(s));
      BigInt den(s.substr(slash + 1));
      if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
      return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const Error*>(&e)) throw;
      fail(ErrorCode::ParseError, "bad rational '" + s + "'");
    }
  }
  static std::string str(const Rational& r) { return r.str(); }
};

template <std::uint32_t P>
struct FieldTraits<ModInt<P>> {
  static ModInt<P> parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return ModInt<P>(static_cast<long long>(BigInt(s) % P));
      }
      ModInt<P> num(static_cast<long long>(BigInt(s.substr(0, slash)) % P));
      ModInt<P> den(static_cast<long long>(BigInt(s.substr(slash + 1)) % P));
      return num / den;
    } catch (const Error&) {
      throw;
    } catch (const std::runtime_error&) {
      fail(ErrorCode::ParseError, "bad field element '" + s + "'");
    }
  }
  static std::string str(const ModInt<P>& a) { return std::to_string(a.value()); }
};

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt ipow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

}  // namespace quiver
