#include "ordered_pricing/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace ordered_pricing {

namespace {

[[noreturn]] void mixed_mode() {
  throw std::logic_error("Scalar: rational and real operands mixed in one expression");
}

double approx_log2(const mpq_class& q) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log2(std::fabs(mn)) + static_cast<double>(en) -
         (std::log2(std::fabs(md)) + static_cast<double>(ed));
}

}  // namespace

Scalar Scalar::rational(mpq_class v) {
  if (mpz_sgn(v.get_den().get_mpz_t()) == 0) {
    throw std::domain_error("Scalar: zero denominator");
  }
  v.canonicalize();
  Scalar s;
  s.kind_ = Kind::rational;
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  return rational(mpq_class(num, den));
}

Scalar Scalar::real(double v) {
  if (std::isnan(v)) throw std::domain_error("Scalar: NaN");
  if (std::isinf(v)) return infinity();
  Scalar s;
  s.kind_ = Kind::real;
  s.real_ = v;
  return s;
}

Scalar Scalar::from_double_exact(double v) {
  if (!std::isfinite(v)) throw std::domain_error("Scalar: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return rational(std::move(q));
}

Scalar Scalar::infinity() {
  Scalar s;
  s.kind_ = Kind::infinite;
  return s;
}

Scalar Scalar::parse_exact(const std::string& text) {
  if (text == "inf") return infinity();
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("Scalar: cannot parse \"" + text + "\"");
  }
  return rational(std::move(q));
}

bool Scalar::is_zero() const {
  switch (kind_) {
    case Kind::rational: return mpq_sgn(rat_.get_mpq_t()) == 0;
    case Kind::real: return real_ == 0.0;
    case Kind::infinite: return false;
  }
  return false;
}

bool Scalar::is_integer() const {
  return kind_ == Kind::rational && rat_.get_den() == 1;
}

const mpq_class& Scalar::rat() const {
  if (kind_ != Kind::rational) throw std::logic_error("Scalar: not a rational");
  return rat_;
}

double Scalar::to_double() const {
  switch (kind_) {
    case Kind::rational: return rat_.get_d();
    case Kind::real: return real_;
    case Kind::infinite: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

int Scalar::sign() const {
  switch (kind_) {
    case Kind::rational: return mpq_sgn(rat_.get_mpq_t());
    case Kind::real: return real_ > 0 ? 1 : (real_ < 0 ? -1 : 0);
    case Kind::infinite: return 1;
  }
  return 0;
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::rational: return rational(mpq_class(-rat_));
    case Kind::real: return real(-real_);
    case Kind::infinite: throw std::domain_error("Scalar: negated infinity");
  }
  return Scalar();
}

Scalar Scalar::abs() const {
  return sign() < 0 ? -*this : *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_infinite() || b.is_infinite()) return Scalar::infinity();
  if (a.kind_ != b.kind_) mixed_mode();
  if (a.kind_ == Scalar::Kind::rational) return Scalar::rational(mpq_class(a.rat_ + b.rat_));
  return Scalar::real(a.real_ + b.real_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (b.is_infinite()) throw std::domain_error("Scalar: subtracting infinity");
  if (a.is_infinite()) return Scalar::infinity();
  if (a.kind_ != b.kind_) mixed_mode();
  if (a.kind_ == Scalar::Kind::rational) return Scalar::rational(mpq_class(a.rat_ - b.rat_));
  return Scalar::real(a.real_ - b.real_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.sign() <= 0 || b.sign() <= 0) {
      throw std::domain_error("Scalar: infinity times a non-positive scalar");
    }
    return Scalar::infinity();
  }
  if (a.kind_ != b.kind_) mixed_mode();
  if (a.kind_ == Scalar::Kind::rational) return Scalar::rational(mpq_class(a.rat_ * b.rat_));
  return Scalar::real(a.real_ * b.real_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_infinite()) throw std::domain_error("Scalar: dividing by infinity");
  if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (a.is_infinite()) {
    if (b.sign() < 0) throw std::domain_error("Scalar: infinity divided by a negative");
    return Scalar::infinity();
  }
  if (a.kind_ != b.kind_) mixed_mode();
  if (a.kind_ == Scalar::Kind::rational) return Scalar::rational(mpq_class(a.rat_ / b.rat_));
  return Scalar::real(a.real_ / b.real_);
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_infinite() && b.is_infinite()) return 0;
  if (a.is_infinite()) return 1;
  if (b.is_infinite()) return -1;
  if (a.kind() != b.kind()) mixed_mode();
  if (a.is_rational()) {
    int c = mpq_cmp(a.rat().get_mpq_t(), b.rat().get_mpq_t());
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  double x = a.to_double(), y = b.to_double();
  if (x == y) return 0;
  double scale = std::max(std::fabs(x), std::fabs(y));
  if (std::fabs(x - y) <= kFloatRelTolerance * scale) return 0;
  return x < y ? -1 : 1;
}

std::string Scalar::to_exact_string() const {
  switch (kind_) {
    case Kind::rational: return rat_.get_str();
    case Kind::infinite: return "inf";
    case Kind::real: break;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", real_);
  return buf;
}

std::string Scalar::to_decimal_string(int significant_digits) const {
  if (kind_ == Kind::infinite) return "inf";
  if (kind_ == Kind::real) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, real_);
    return buf;
  }
  if (is_zero()) return "0";

  mpf_class f(0, 64 + static_cast<int>(3.4 * significant_digits));
  mpf_set_q(f.get_mpf_t(), rat_.get_mpq_t());
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, significant_digits);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  // digits represents 0.DIGITS * 10^exp10.
  long e = static_cast<long>(exp10) - 1;  // exponent of the leading digit
  std::string out;
  if (e < -4 || e >= significant_digits) {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    if (static_cast<size_t>(e) + 1 >= digits.size()) {
      out = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else {
    out = "0." + std::string(-e - 1, '0') + digits;
  }
  return sign + out;
}

Scalar pow_int(const Scalar& base, long exp) {
  if (base.is_infinite()) throw std::domain_error("Scalar: power of infinity");
  if (exp == 0) return base.is_real() ? Scalar::real(1.0) : Scalar(1);
  if (base.is_real()) return Scalar::real(std::pow(base.to_double(), static_cast<double>(exp)));
  if (base.is_zero()) {
    if (exp < 0) throw std::domain_error("Scalar: zero to a negative power");
    return Scalar(0);
  }
  bool invert = exp < 0;
  unsigned long e = invert ? -static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
  mpq_class result;
  mpz_pow_ui(result.get_num().get_mpz_t(), base.rat().get_num().get_mpz_t(), e);
  mpz_pow_ui(result.get_den().get_mpz_t(), base.rat().get_den().get_mpz_t(), e);
  if (invert) {
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), result.get_mpq_t());
    result = inv;
  }
  return Scalar::rational(std::move(result));
}

long floor_log(const Scalar& x, const Scalar& base) {
  if (x.sign() <= 0 || !x.is_finite()) throw std::domain_error("floor_log: x must be positive and finite");
  if (compare(base, Scalar(1)) <= 0 || !base.is_finite()) {
    throw std::domain_error("floor_log: base must exceed 1");
  }
  double lx, lb;
  if (x.is_rational()) {
    lx = approx_log2(x.rat());
    lb = approx_log2(base.rat());
  } else {
    lx = std::log2(x.to_double());
    lb = std::log2(base.to_double());
  }
  long r = static_cast<long>(std::floor(lx / lb));
  Scalar p = pow_int(base, r);
  while (compare(p, x) > 0) {
    p = p / base;
    --r;
  }
  for (Scalar next = p * base; compare(next, x) <= 0; next = p * base) {
    p = next;
    ++r;
  }
  return r;
}

Scalar ceil_scalar(const Scalar& x) {
  if (x.is_infinite()) return x;
  if (x.is_real()) return Scalar::real(std::ceil(x.to_double()));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.rat().get_num().get_mpz_t(), x.rat().get_den().get_mpz_t());
  return Scalar::rational(mpq_class(q));
}

bool scalar_sort_less(const Scalar& a, const Scalar& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  if (a.is_rational() && b.is_rational()) {
    return mpq_cmp(a.rat().get_mpq_t(), b.rat().get_mpq_t()) < 0;
  }
  return a.to_double() < b.to_double();
}

}  // namespace ordered_pricing
