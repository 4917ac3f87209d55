#include "polyfrenet/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace polyfrenet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad(text);

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);

  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out = Rational(mpz_class(num), d);
    out.canonicalize();
  } else {
    std::string mant = body;
    long exp10 = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
      mant = body.substr(0, e);
      std::string ex = body.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
        eneg = ex[0] == '-';
        ex = ex.substr(1);
      }
      if (!all_digits(ex) || ex.size() > 6) bad(text);
      exp10 = std::stol(ex) * (eneg ? -1 : 1);
    }
    std::string digits;
    long frac = 0;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
      std::string ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
      if (ip.empty() && fp.empty()) bad(text);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
      digits = ip + fp;
      frac = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) bad(text);
      digits = mant;
    }
    if (digits.empty()) bad(text);
    out = Rational(mpz_class(digits));
    long shift = exp10 - frac;
    mpz_class ten = 1;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
      out *= ten;
    else
      out /= ten;
    out.canonicalize();
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

bool is_perfect_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& q) {
  if (!is_perfect_square(q)) throw std::domain_error("not a rational square: " + q.get_str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
  } else if (is_perfect_square(d_)) {
    a_ += b_ * exact_sqrt(d_);
    b_ = 0;
    d_ = 0;
  }
}

int QuadraticSurd::sign() const {
  if (sgn(b_) == 0) return sgn(a_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  int cmpv = cmp(lhs, rhs);
  return cmpv > 0 ? sa : (cmpv < 0 ? sb : 0);
}

double QuadraticSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) os << "-";
  Rational ab = abs(b_);
  if (ab != 1) os << ab.get_str() << "*";
  os << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

namespace {

const Rational& common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::invalid_argument("QuadraticSurd: unrelated radicands " + x.radicand().get_str() + " and " +
                              y.radicand().get_str());
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Rational& d = common_radicand(x, y);
  return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Rational& d = common_radicand(x, y);
  return QuadraticSurd(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Rational& d = common_radicand(x, y);
  return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational() || y.is_rational() || x.d_ == y.d_) {
    Rational d = x.is_rational() ? y.d_ : x.d_;
    Rational bx = x.is_rational() ? Rational(0) : x.b_;
    Rational by = y.is_rational() ? Rational(0) : y.b_;
    return QuadraticSurd(x.a_ - y.a_, bx - by, d).sign();
  }
  throw std::invalid_argument("QuadraticSurd compare: unrelated radicands");
}

}  // namespace polyfrenet
