#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fullness/coefficient.hpp"
#include "fullness/monomial.hpp"

namespace fullness {

/// Ambient polynomial ring K[x_1..x_k] with a fixed monomial order.
class PolyRing {
 public:
  /// Throws InputError on empty, duplicate or malformed variable names.
  PolyRing(std::vector<std::string> variables, Field field,
           MonomialOrder order = MonomialOrder::degrevlex());

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  Ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  /// Same variables and field.
  bool compatible(const PolyRing& other) const;

  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables, Field field = Field(),
                  MonomialOrder order = MonomialOrder::degrevlex());

}  // namespace fullness
