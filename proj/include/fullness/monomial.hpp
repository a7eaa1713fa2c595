#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace fullness {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. The length is fixed by the ring;
/// slots past `size()` are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const std::uint32_t> exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint32_t e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

enum class Ordering { kLT = -1, kEQ = 0, kGT = 1 };

/// Monomial order. A block order compares the first `split` variables by
/// degrevlex, and only on a tie compares the remaining variables by degrevlex;
/// it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { kDegRevLex, kLex, kBlock };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::kBlock, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Throws std::invalid_argument on length mismatch.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::kLT; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

}  // namespace fullness

template <>
struct std::hash<fullness::Monomial> {
  std::size_t operator()(const fullness::Monomial& m) const { return m.hash(); }
};
