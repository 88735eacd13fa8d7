#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfkit {

class Scalar;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Either the rationals (characteristic 0) or GF(p) for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field gf(std::uint64_t p);

  /// Accepts "rational", "Q", "gf:7", "GF(7)".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;

  /// Strict literal parser: "p/q" or an integer for the rationals, 0..p-1 for GF(p).
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

struct BigRational;

/// Exact field element. Rationals use a 64-bit fast path and fall back to GMP on overflow.
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2" or a residue "5".
  std::string str() const;

  /// Residue for GF(p); numerator/denominator pair for small rationals.
  std::int64_t residue() const { return num_; }

 private:
  friend class Field;
  static Scalar small(std::uint32_t p, std::int64_t num, std::int64_t den);
  static Scalar rational_from_wide(__int128 num, __int128 den);
  static Scalar from_big(const BigRational& q);
  BigRational to_big() const;
  void check_same(const Scalar& b) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
  std::uint32_t p_ = 0;
};

}  // namespace hopfkit
