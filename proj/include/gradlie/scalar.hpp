#pragma once

// Exact scalars: the rationals (GMP-backed) and prime fields F_p.
//
// Every scalar carries enough information to recover its field, so mixing
// elements of different fields is detected at run time instead of producing
// garbage. Generic code is written against the ExactField concept below and
// constructs constants through K::from_int / K::from_ratio with a FieldTag.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gradlie/errors.hpp"

namespace gradlie {

/// Identifies a field: characteristic 0 means Q, otherwise F_p.
struct FieldTag {
  std::uint32_t characteristic = 0;

  [[nodiscard]] bool is_rational() const noexcept { return characteristic == 0; }
  [[nodiscard]] std::string name() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic);
  }
  friend bool operator==(const FieldTag&, const FieldTag&) = default;

  static FieldTag rationals() noexcept { return {}; }
  static FieldTag prime(std::uint32_t p);
};

inline bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldTag FieldTag::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p > (1u << 31))
    throw FieldMismatch("not a supported prime modulus: " + std::to_string(p));
  return FieldTag{p};
}

namespace detail {

inline mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty()) throw ParseError("empty number");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size()) throw ParseError("malformed number '" + t + "'");
  for (std::size_t i = start; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') throw ParseError("malformed number '" + t + "'");
  if (t[0] == '+') t.erase(t.begin());
  return mpz_class(t, 10);
}

}  // namespace detail

/// Element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  static Rational from_int(const FieldTag& f, long long n) {
    check(f);
    Rational r;
    r.v_ = mpz_class(static_cast<long>(n));
    return r;
  }
  static Rational from_ratio(const FieldTag& f, long long n, long long d) {
    check(f);
    if (d == 0) throw DivisionByZero("zero denominator");
    Rational r;
    r.v_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    r.v_.canonicalize();
    return r;
  }
  static Rational parse(const FieldTag& f, std::string_view s) {
    check(f);
    Rational r;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      r.v_ = detail::parse_integer(s);
      return r;
    }
    mpz_class num = detail::parse_integer(s.substr(0, slash));
    mpz_class den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  [[nodiscard]] FieldTag field() const noexcept { return {}; }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] const mpq_class& value() const noexcept { return v_; }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  [[nodiscard]] std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static void check(const FieldTag& f) {
    if (!f.is_rational()) throw FieldMismatch("expected Q, got " + f.name());
  }
  mpq_class v_;
};

/// Element of F_p, stored reduced to [0, p).
class Fp {
 public:
  Fp() = default;

  static Fp from_int(const FieldTag& f, long long n) {
    check(f);
    long long p = f.characteristic;
    long long r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), f.characteristic);
  }
  static Fp from_ratio(const FieldTag& f, long long n, long long d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    return from_int(f, n) / from_int(f, d);
  }
  static Fp parse(const FieldTag& f, std::string_view s) {
    check(f);
    auto reduce = [&](std::string_view t) {
      mpz_class z = detail::parse_integer(t);
      mpz_class m = z % f.characteristic;
      if (m < 0) m += f.characteristic;
      return Fp(static_cast<std::uint32_t>(m.get_ui()), f.characteristic);
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return reduce(s);
    Fp num = reduce(s.substr(0, slash));
    Fp den = reduce(s.substr(slash + 1));
    if (den.is_zero()) throw ParseError("denominator not invertible in '" + std::string(s) + "'");
    return num / den;
  }

  [[nodiscard]] FieldTag field() const noexcept { return FieldTag{p_}; }
  [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return v_ == 1; }
  [[nodiscard]] std::uint32_t value() const noexcept { return v_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }

  [[nodiscard]] Fp inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F" + std::to_string(p_));
    // Fermat: v^(p-2)
    std::uint64_t base = v_, acc = 1, e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Fp(static_cast<std::uint32_t>(acc), p_);
  }

  [[nodiscard]] std::string str() const { return std::to_string(v_); }

  Fp& operator+=(const Fp& o) {
    same(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    same(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.same(b);
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
    a.same(b);
    return a.v_ <=> b.v_;
  }

 private:
  Fp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
  static void check(const FieldTag& f) {
    if (f.is_rational()) throw FieldMismatch("expected a prime field, got Q");
  }
  void same(const Fp& o) const {
    if (p_ != o.p_)
      throw FieldMismatch("mixed fields F" + std::to_string(p_) + " and F" + std::to_string(o.p_));
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class K>
concept ExactField = requires(K a, K b, FieldTag f, std::string_view s) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<K>;
  { a.str() } -> std::convertible_to<std::string>;
  { K::from_int(f, 1) } -> std::same_as<K>;
  { K::from_ratio(f, 1, 2) } -> std::same_as<K>;
  { K::parse(f, s) } -> std::same_as<K>;
};

template <class K>
inline constexpr bool is_prime_field_v = std::is_same_v<K, Fp>;

template <ExactField K>
K zero_of(const FieldTag& f) { return K::from_int(f, 0); }
template <ExactField K>
K one_of(const FieldTag& f) { return K::from_int(f, 1); }

}  // namespace gradlie
