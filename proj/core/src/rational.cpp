#include "sqmv/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sqmv {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("rational overflow"); }

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) overflow();
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (n == INT64_MIN || d == INT64_MIN) overflow();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) {
    if (x.den_ == 1) {
      std::int64_t s;
      if (__builtin_add_overflow(x.num_, y.num_, &s)) overflow();
      return Rational(s);
    }
    return make(static_cast<__int128>(x.num_) + y.num_, x.den_);
  }
  return make(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
              static_cast<__int128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return make(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("division by zero");
  return make(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (x.den_ == y.den_) return x.num_ <=> y.num_;
  __int128 l = static_cast<__int128>(x.num_) * y.den_;
  __int128 r = static_cast<__int128>(y.num_) * x.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: " + std::string(text)); };
  auto slash = text.find('/');
  auto part = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  };
  if (slash == std::string_view::npos) return Rational(part(text));
  return Rational(part(text.substr(0, slash)), part(text.substr(slash + 1)));
}

Rational clamp_unit(const Rational& x) {
  if (x > Rational(1)) return Rational(1);
  if (x < Rational(-1)) return Rational(-1);
  return x;
}

std::size_t hash_value(const Rational& r) {
  std::size_t h = std::hash<std::int64_t>{}(r.num());
  return h * 1000003u ^ std::hash<std::int64_t>{}(r.den());
}

}  // namespace sqmv
