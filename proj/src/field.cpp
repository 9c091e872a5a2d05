#include "mobius/field.hpp"

#include <stdexcept>

namespace mobius {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!mobius::is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::prime, p};
}

namespace {

mpz_class mod_p(const mpz_class& x, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r;
}

}  // namespace

Scalar FieldSpec::reduce(const Scalar& x) const {
  if (kind_ == Kind::rationals) return x;
  mpz_class num = mod_p(x.get_num(), modulus_);
  mpz_class den = mod_p(x.get_den(), modulus_);
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  if (den != 1) {
    mpz_class m(static_cast<unsigned long>(modulus_));
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    num = mod_p(num * den, modulus_);
  }
  return Scalar(num);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= static_cast<unsigned long>(modulus_)) s -= static_cast<unsigned long>(modulus_);
  return Scalar(s);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += static_cast<unsigned long>(modulus_);
  return Scalar(s);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a * b;
  return Scalar(mod_p(a.get_num() * b.get_num(), modulus_));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (kind_ == Kind::rationals) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(static_cast<unsigned long>(modulus_)) - a.get_num());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (kind_ == Kind::rationals) return 1 / a;
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(modulus_));
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? "QQ" : "GF(" + std::to_string(modulus_) + ")";
}

}  // namespace mobius
