#include "fullness/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "fullness/errors.hpp"

namespace fullness {

namespace {

std::uint16_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw DegreeCapExceeded("exponent " + std::to_string(e) + " overflows");
  }
  return static_cast<std::uint16_t>(e);
}

// Degree-reverse-lexicographic comparison restricted to variables [lo, hi).
Ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? Ordering::kGT : Ordering::kLT;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::kGT : Ordering::kLT;
  }
  return Ordering::kEQ;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
  }
}

Monomial::Monomial(std::span<const std::uint32_t> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  std::uint16_t checked = checked_exponent(e);
  degree_ = degree_ - exp_[i] + checked;
  exp_[i] = checked;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = checked_exponent(std::uint64_t{exp_[i]} + other.exp_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) {
    throw std::invalid_argument("monomial length mismatch");
  }
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::kDegRevLex:
      return degrevlex_range(a, b, 0, n);
    case Kind::kLex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Ordering::kGT : Ordering::kLT;
      }
      return Ordering::kEQ;
    case Kind::kBlock: {
      const std::size_t s = std::min(split_, n);
      Ordering first = degrevlex_range(a, b, 0, s);
      if (first != Ordering::kEQ) return first;
      return degrevlex_range(a, b, s, n);
    }
  }
  return Ordering::kEQ;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kDegRevLex:
      return "degrevlex";
    case Kind::kLex:
      return "lex";
    case Kind::kBlock:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace fullness
