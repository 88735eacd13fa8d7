#include "hopfkit/field.hpp"

#include <gmpxx.h>

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace hopfkit {

struct BigRational {
  mpq_class q;
};

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(__int128 v) { return v < kSmallLimit && v > -kSmallLimit; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw FieldError("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw FieldError("modulus is not prime: " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.rfind("gf:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')') {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw FieldError("unknown field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw FieldError("bad modulus in '" + std::string(text) + "'");
  return gf(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::zero() const { return Scalar::small(p_, 0, 1); }
Scalar Field::one() const { return Scalar::small(p_, 1, 1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar::rational_from_wide(v, 1);
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::small(p_, r, 1);
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw FieldError("zero denominator");
  if (p_ == 0) return Scalar::rational_from_wide(num, den);
  Scalar d = from_int(den);
  if (d.is_zero()) throw FieldError("denominator vanishes in " + name());
  return from_int(num) / d;
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto parse_int = [&](std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (p_ == 0) {
    auto slash = text.find('/');
    long long num = 0, den = 1;
    if (slash == std::string_view::npos) {
      if (!parse_int(text, num)) {
        // fall back to GMP for very long integers
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) throw FieldError("bad rational '" + std::string(text) + "'");
        q.canonicalize();
        BigRational b{q};
        return Scalar::from_big(b);
      }
      return from_int(num);
    }
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) {
      mpq_class q;
      if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
        throw FieldError("bad rational '" + std::string(text) + "'");
      q.canonicalize();
      BigRational b{q};
      return Scalar::from_big(b);
    }
    if (den <= 0) throw FieldError("denominator must be positive in '" + std::string(text) + "'");
    return from_fraction(num, den);
  }
  long long v = 0;
  if (!parse_int(text, v) || v < 0 || v >= static_cast<long long>(p_))
    throw FieldError("GF(" + std::to_string(p_) + ") literal must be in 0.." + std::to_string(p_ - 1) + ", got '" +
                     std::string(text) + "'");
  return Scalar::small(p_, v, 1);
}

Scalar Scalar::small(std::uint32_t p, std::int64_t num, std::int64_t den) {
  Scalar s;
  s.p_ = p;
  s.num_ = num;
  s.den_ = den;
  return s;
}

Scalar Scalar::rational_from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (fits_small(num) && fits_small(den)) return small(0, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  // only reachable when both operands were small, so each half fits in 127 bits
  auto to_z = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  BigRational b;
  b.q = mpq_class(to_z(num), to_z(den));
  b.q.canonicalize();
  return from_big(b);
}

Scalar Scalar::from_big(const BigRational& b) {
  const mpz_class& n = b.q.get_num();
  const mpz_class& d = b.q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) < 62 && mpz_sizeinbase(d.get_mpz_t(), 2) < 62) {
    return small(0, mpz_get_si(n.get_mpz_t()), mpz_get_si(d.get_mpz_t()));
  }
  Scalar s;
  s.big_ = std::make_shared<const BigRational>(b);
  return s;
}

BigRational Scalar::to_big() const {
  if (big_) return *big_;
  BigRational b;
  b.q = mpq_class(to_mpz(num_), to_mpz(den_));
  return b;
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::gf(p_); }

void Scalar::check_same(const Scalar& b) const {
  if (p_ != b.p_) throw FieldError("mixed-field arithmetic between " + field().name() + " and " + b.field().name());
}

Scalar Scalar::operator-() const {
  if (p_ != 0) return small(p_, num_ == 0 ? 0 : p_ - num_, 1);
  if (big_) {
    BigRational b{-big_->q};
    return from_big(b);
  }
  return small(0, -num_, den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (p_ != 0) return small(p_, powmod(static_cast<std::uint32_t>(num_), p_ - 2, p_), 1);
  if (big_) {
    BigRational b{1 / big_->q};
    b.q.canonicalize();
    return from_big(b);
  }
  return rational_from_wide(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.p_ != 0) {
    std::uint64_t s = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    if (s >= a.p_) s -= a.p_;
    return Scalar::small(a.p_, static_cast<std::int64_t>(s), 1);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) return Scalar::rational_from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Scalar::rational_from_wide(n, d);
  }
  BigRational r{a.to_big().q + b.to_big().q};
  return Scalar::from_big(r);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.p_ != 0)
    return Scalar::small(a.p_, mulmod(static_cast<std::uint32_t>(a.num_), static_cast<std::uint32_t>(b.num_), a.p_), 1);
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar::small(0, 0, 1);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return Scalar::rational_from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  BigRational r{a.to_big().q * b.to_big().q};
  return Scalar::from_big(r);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical form keeps small values small
    return a.big_->q == b.big_->q;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::str() const {
  if (big_) return big_->q.get_str();
  if (p_ != 0 || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hopfkit
