#include "fullness/coefficient.hpp"

#include <stdexcept>

#include "fullness/errors.hpp"

namespace fullness {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1U << 31))) {
    throw InputError("characteristic " + std::to_string(p_) +
                     " is not 0 or a prime below 2^31");
  }
}

Coefficient Field::zero() const {
  if (is_rational()) return mpq_class(0);
  return Residue{0};
}

Coefficient Field::one() const {
  if (is_rational()) return mpq_class(1);
  return Residue{1};
}

Coefficient Field::from_int(long long v) const {
  if (is_rational()) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return mpq_class(z);
  }
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Residue{static_cast<std::uint32_t>(r)};
}

Coefficient Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return mpq_class(v);
  return Residue{reduce_mpz(v, p_)};
}

Coefficient Field::from_fraction(const mpz_class& num,
                                 const mpz_class& den) const {
  if (den == 0) throw InputError("zero denominator");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  std::uint32_t d = reduce_mpz(den, p_);
  if (d == 0) {
    throw InputError("denominator " + den.get_str() +
                     " is divisible by the characteristic " +
                     std::to_string(p_));
  }
  return mul(Residue{reduce_mpz(num, p_)}, inv(Residue{d}));
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  std::uint32_t s = std::get<Residue>(a).value + std::get<Residue>(b).value;
  if (s >= p_) s -= p_;
  return Residue{s};
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
  std::uint32_t x = std::get<Residue>(a).value;
  std::uint32_t y = std::get<Residue>(b).value;
  return Residue{x >= y ? x - y : x + p_ - y};
}

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  std::uint64_t prod = static_cast<std::uint64_t>(std::get<Residue>(a).value) *
                       std::get<Residue>(b).value;
  return Residue{static_cast<std::uint32_t>(prod % p_)};
}

Coefficient Field::neg(const Coefficient& a) const {
  if (is_rational()) return mpq_class(-std::get<mpq_class>(a));
  std::uint32_t x = std::get<Residue>(a).value;
  return Residue{x == 0 ? 0 : p_ - x};
}

Coefficient Field::inv(const Coefficient& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (is_rational()) return mpq_class(1 / std::get<mpq_class>(a));
  return Residue{mod_pow(std::get<Residue>(a).value, p_ - 2, p_)};
}

bool Field::is_zero(const Coefficient& a) const {
  if (is_rational()) return sgn(std::get<mpq_class>(a)) == 0;
  return std::get<Residue>(a).value == 0;
}

bool Field::is_one(const Coefficient& a) const {
  if (is_rational()) return std::get<mpq_class>(a) == 1;
  return std::get<Residue>(a).value == 1;
}

bool Field::equal(const Coefficient& a, const Coefficient& b) const {
  if (is_rational()) return std::get<mpq_class>(a) == std::get<mpq_class>(b);
  return std::get<Residue>(a) == std::get<Residue>(b);
}

bool Field::prints_negative(const Coefficient& a) const {
  if (is_rational()) return sgn(std::get<mpq_class>(a)) < 0;
  return std::get<Residue>(a).value > p_ / 2;
}

std::string Field::to_string(const Coefficient& a) const {
  if (is_rational()) return std::get<mpq_class>(a).get_str();
  std::uint32_t x = std::get<Residue>(a).value;
  if (x > p_ / 2) return "-" + std::to_string(p_ - x);
  return std::to_string(x);
}

}  // namespace fullness
