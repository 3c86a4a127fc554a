#include "wintgen/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

namespace wintgen {
namespace {

using u128 = unsigned __int128;

constexpr long long kMin = std::numeric_limits<long long>::min();

bool fits_small(__int128 v) {
  return v > static_cast<__int128>(kMin) &&
         v <= static_cast<__int128>(std::numeric_limits<long long>::max());
}

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(__int128 v) {
  bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (neg) z = -z;
  return z;
}

bool mpz_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != kMin;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long long v) {
  if (v == kMin) {
    *this = from_mpq(mpq_class(mpz_from(v)));
  } else {
    num_ = v;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  if (q.get_den() == 0) throw DivisionByZero();
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw DivisionByZero();
  if (num == 0) return Rational();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
  mpq_class q;
  q.get_num() = mpz_from(num);
  q.get_den() = mpz_from(den);
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto p = trim(s.substr(0, slash));
    auto q = trim(s.substr(slash + 1));
    if (!valid_integer_text(p) || !valid_integer_text(q))
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (p.front() == '+') p.remove_prefix(1);
    if (q.front() == '+') q.remove_prefix(1);
    mpz_class zp{std::string(p), 10}, zq{std::string(q), 10};  // base 10: GMP would read "010" as octal
    if (zq == 0) throw DivisionByZero();
    return Rational(mpq_class(zp, zq));
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !valid_integer_text(ip)) ||
        (!fp.empty() && (!valid_integer_text(fp) || fp.front() == '-' || fp.front() == '+')))
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    std::string digits = std::string(ip) + std::string(fp);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    if (neg) num = -num;
    return Rational(mpq_class(num, den));
  }
  if (!valid_integer_text(s))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (s.front() == '+') s.remove_prefix(1);
  return Rational(mpq_class(mpz_class(std::string(s), 10)));
}

Rational Rational::from_double_decimal(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite number");
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  if (res.ec != std::errc()) throw std::invalid_argument("number out of range");
  return parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  q.get_num() = mpz_from(num_);
  q.get_den() = mpz_from(den_);
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(mpq_class(big_->get_den(), big_->get_num()));
  return from_wide(den_, num_);
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpq_class q = to_mpq();
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0) return y;
    if (y.num_ == 0) return x;
    if (x.den_ == y.den_)
      return Rational::from_wide(static_cast<__int128>(x.num_) + y.num_, x.den_);
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                               static_cast<__int128>(x.den_) * y.den_);
  }
  return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0 || y.num_ == 0) return Rational();
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
  }
  return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (!x.big_ && !y.big_)
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
  return Rational::from_mpq(x.to_mpq() / y.to_mpq());
}

bool operator==(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
  if (!x.big_ || !y.big_) return false;  // canonical storage: small values never stored big
  return *x.big_ == *y.big_;
}

bool operator<(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_)
    return static_cast<__int128>(x.num_) * y.den_ < static_cast<__int128>(y.num_) * x.den_;
  return x.to_mpq() < y.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace wintgen
