#include "fullness/poly_ring.hpp"

#include <cctype>
#include <set>

#include "fullness/errors.hpp"

namespace fullness {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> variables, Field field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  if (variables_.empty()) throw InputError("a ring needs at least one variable");
  if (variables_.size() > kMaxVariables) {
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

bool PolyRing::compatible(const PolyRing& other) const {
  return variables_ == other.variables_ && field_ == other.field_;
}

std::string PolyRing::to_string() const {
  std::string out = field_.is_rational() ? "QQ" : "F_" + std::to_string(field_.characteristic());
  out += "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
  }
  out += "; " + order_.name() + "]";
  return out;
}

RingPtr make_ring(std::vector<std::string> variables, Field field, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(variables), field, order);
}

}  // namespace fullness
