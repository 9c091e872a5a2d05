#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mobius {

using Scalar = mpq_class;
using Integer = mpz_class;

// The coefficient field of every vector space in the library: the rationals,
// or GF(p). Prime-field scalars are stored as integers in [0, p).
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  // Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_prime() const { return kind_ == Kind::prime; }

  // Canonical representative of x in this field. For GF(p) the denominator
  // must be invertible mod p.
  Scalar reduce(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), modulus_(p) {}

  Kind kind_ = Kind::rationals;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace mobius
