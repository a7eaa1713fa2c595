#pragma once

// Brute-force monomial ideals on raw exponent vectors. Shares no code with
// the library, so it can serve as an oracle for products, intersections and
// colons of monomial ideals.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Exponents = std::vector<std::uint32_t>;

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline Exponents times(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// a / gcd(a, b)
inline Exponents quotient_by_gcd(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - std::min(a[i], b[i]);
  return out;
}

class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Exponents> gens) : nvars_(nvars) {
    minimize(std::move(gens));
  }

  std::size_t nvars() const { return nvars_; }
  const std::set<Exponents>& minimal() const { return minimal_; }

  bool contains(const Exponents& m) const {
    return std::any_of(minimal_.begin(), minimal_.end(),
                       [&m](const Exponents& g) { return divides(g, m); });
  }
  bool is_unit() const { return contains(Exponents(nvars_, 0)); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.minimal_ == b.minimal_;
  }

  friend MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Exponents> gens;
    for (const auto& f : a.minimal_) {
      for (const auto& g : b.minimal_) gens.push_back(times(f, g));
    }
    return MonomialIdeal(a.nvars_, std::move(gens));
  }

  friend MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Exponents> gens;
    for (const auto& f : a.minimal_) {
      for (const auto& g : b.minimal_) gens.push_back(lcm(f, g));
    }
    return MonomialIdeal(a.nvars_, std::move(gens));
  }

  friend MonomialIdeal colon(const MonomialIdeal& a, const Exponents& m) {
    std::vector<Exponents> gens;
    for (const auto& f : a.minimal_) gens.push_back(quotient_by_gcd(f, m));
    return MonomialIdeal(a.nvars_, std::move(gens));
  }

  friend MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Exponents> one{Exponents(a.nvars_, 0)};
    MonomialIdeal out(a.nvars_, one);
    for (const auto& g : b.minimal_) out = intersection(out, colon(a, g));
    return out;
  }

 private:
  void minimize(std::vector<Exponents> gens) {
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& h : gens) {
        if (h != g && divides(h, g)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal_.insert(g);
    }
  }

  std::size_t nvars_;
  std::set<Exponents> minimal_;
};

}  // namespace oracle
