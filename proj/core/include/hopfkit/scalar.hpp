#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfkit {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Base field: characteristic 0 means the rationals, otherwise a prime p < 2^61
// and elements are residues in [0, p).
struct Field {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p);
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonicalizes); residues live in [0, p).
class Scalar {
 public:
  Scalar() : fld_{0}, q_(0), r_(0) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_fraction(const Field& f, long long num, long long den);
  static Scalar from_mpq(mpq_class v);
  static Scalar residue(const Field& f, std::uint64_t v);
  // Accepts "a" or "a/b"; in F_p the parts are reduced mod p and b inverted.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational value (characteristic 0 only).
  const mpq_class& rational() const;
  // Residue value (prime field only).
  std::uint64_t residue_value() const;

  std::string str() const;

 private:
  Field fld_;
  mpq_class q_;
  std::uint64_t r_;

  void check_same(const Scalar& o) const;
};

}  // namespace hopfkit
