#include "hopfkit/scalar.hpp"

namespace hopfkit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 61) || !is_prime_u64(p))
    throw error("field characteristic must be a prime below 2^61");
  return Field{p};
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s;
  s.fld_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_fraction(const Field& f, long long num, long long den) {
  if (den == 0) throw error("zero denominator");
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_mpq(mpq_class v) {
  Scalar s;
  s.fld_ = Field::rationals();
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t v) {
  if (f.is_rational()) throw error("residue requires a prime field");
  Scalar s;
  s.fld_ = f;
  s.r_ = v % f.p;
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);
  try {
    if (f.is_rational()) {
      mpq_class q(den.empty() ? num : num + "/" + den, 10);
      q.canonicalize();
      if (q.get_den() == 0) throw error("zero denominator");
      return from_mpq(q);
    }
    mpz_class n(num, 10);
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_class r = n % pz;
    if (r < 0) r += pz;
    Scalar a = residue(f, r.get_ui());
    if (den.empty()) return a;
    mpz_class d(den, 10);
    mpz_class rd = d % pz;
    if (rd < 0) rd += pz;
    return a / residue(f, rd.get_ui());
  } catch (const std::invalid_argument&) {
    throw error("bad scalar literal: " + text);
  }
}

bool Scalar::is_zero() const {
  return fld_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return fld_.is_rational() ? q_ == 1 : r_ == 1 % fld_.p;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(fld_ == o.fld_)) throw error("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t v = r_ + o.r_;  // p < 2^61 so no overflow
    s.r_ = v >= fld_.p ? v - fld_.p : v;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : fld_.p - r_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, fld_.p);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("division by zero");
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, fld_.p - 2, fld_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(fld_ == o.fld_)) return false;
  return fld_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational() const {
  if (!fld_.is_rational()) throw error("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (fld_.is_rational()) throw error("not a prime-field scalar");
  return r_;
}

std::string Scalar::str() const {
  if (fld_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace hopfkit
