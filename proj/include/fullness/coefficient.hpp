#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fullness {

/// Residue class in F_p, always stored in [0, p).
struct Residue {
  std::uint32_t value = 0;
  friend bool operator==(Residue, Residue) = default;
};

/// A field element: either a residue mod the field's prime or an exact
/// rational in lowest terms. Which alternative is live is decided by the
/// owning Field; arithmetic goes through the Field.
using Coefficient = std::variant<Residue, mpq_class>;

/// The coefficient field, Q (characteristic 0) or F_p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// characteristic 0 selects Q; otherwise it must be a prime below 2^31.
  explicit Field(std::uint32_t characteristic = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_int(long long v) const;
  Coefficient from_mpz(const mpz_class& v) const;
  /// Throws InputError if p divides den.
  Coefficient from_fraction(const mpz_class& num, const mpz_class& den) const;

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  /// Throws std::domain_error on zero.
  Coefficient inv(const Coefficient& a) const;

  bool is_zero(const Coefficient& a) const;
  bool is_one(const Coefficient& a) const;
  bool equal(const Coefficient& a, const Coefficient& b) const;

  /// F_p residues are printed in the symmetric range (-p/2, p/2].
  std::string to_string(const Coefficient& a) const;
  /// Sign used when printing: true if the printed form starts with '-'.
  bool prints_negative(const Coefficient& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace fullness
