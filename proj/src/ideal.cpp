#include "fullness/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "fullness/errors.hpp"
#include "fullness/parser.hpp"

namespace fullness {

namespace {

void check_same(const QuotientRingPtr& a, const QuotientRingPtr& b) {
  if (a != b) throw std::invalid_argument("ideals belong to different rings");
}

// P[t] with t first under a block order eliminating t.
RingPtr elimination_ring(const RingPtr& ambient) {
  std::string name = "t";
  while (ambient->index_of(name)) name += "_";
  std::vector<std::string> names{name};
  names.insert(names.end(), ambient->variables().begin(), ambient->variables().end());
  return make_ring(std::move(names), ambient->field(), MonomialOrder::block(1));
}

std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{1});
  return map;
}

// Generators of (as) ∩ (bs) in P.
std::vector<Polynomial> intersect_generators(const QuotientRing& ring,
                                             const std::vector<Polynomial>& as,
                                             const std::vector<Polynomial>& bs) {
  const RingPtr& ambient = ring.ambient();
  const std::size_t n = ambient->num_variables();
  RingPtr elim = elimination_ring(ambient);
  std::vector<std::size_t> up = shift_map(n);
  Polynomial t = Polynomial::variable(elim, 0);
  Polynomial one_minus_t = Polynomial::constant(elim, 1) - t;

  std::vector<Polynomial> gens;
  gens.reserve(as.size() + bs.size());
  for (const auto& a : as) gens.push_back(t * a.mapped(elim, up));
  for (const auto& b : bs) gens.push_back(one_minus_t * b.mapped(elim, up));
  GroebnerBasis gb = buchberger(elim, gens, ring.options());

  std::vector<std::size_t> down(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(),
                            [](const Term& term) { return term.monomial[0] == 0; });
    if (free) out.push_back(g.mapped(ambient, down));
  }
  return out;
}

// Global containment, no localization.
bool contained_in_basis(const Ideal& a, const Ideal& b) {
  return std::all_of(a.reduced_generators().begin(), a.reduced_generators().end(),
                     [&b](const Polynomial& f) { return b.contains(f); });
}

}  // namespace

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> relations,
                           GroebnerBasis basis, GroebnerOptions options)
    : ambient_(std::move(ambient)),
      relations_(std::move(relations)),
      relations_basis_(std::move(basis)),
      options_(options) {}

QuotientRingPtr QuotientRing::create(RingPtr ambient, std::vector<Polynomial> relations,
                                     GroebnerOptions options) {
  for (const auto& r : relations) {
    if (!r.ring()->compatible(*ambient)) {
      throw InputError("relation " + r.to_string() + " is not in the ambient ring");
    }
    if (!ambient->field().is_zero(r.constant_term())) {
      throw InputError("relation " + r.to_string() +
                       " has a nonzero constant term; the origin must lie on the variety");
    }
  }
  GroebnerBasis basis = buchberger(ambient, relations, options);
  if (basis.is_unit()) throw InputError("the relations generate the unit ideal");
  return std::make_shared<const QuotientRing>(std::move(ambient), std::move(relations),
                                              std::move(basis), options);
}

Polynomial QuotientRing::parse(std::string_view src) const {
  return parse_polynomial(src, ambient_);
}

std::string QuotientRing::to_string() const {
  std::string out = ambient_->to_string();
  if (!relations_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) out += ", ";
      out += relations_[i].to_string();
    }
    out += ")";
  }
  return out;
}

Ideal::Ideal(QuotientRingPtr ring, std::vector<Polynomial> generators) {
  for (const auto& g : generators) {
    if (!g.ring()->compatible(*ring->ambient())) {
      throw std::invalid_argument("generator " + g.to_string() + " is not in the ring");
    }
  }
  std::vector<Polynomial> all = generators;
  all.insert(all.end(), ring->relations_basis().elements().begin(),
             ring->relations_basis().elements().end());
  GroebnerBasis basis = buchberger(ring->ambient(), all, ring->options());
  std::vector<Polynomial> reduced;
  for (const auto& g : basis.elements()) {
    if (!ring->relations_basis().contains(g)) reduced.push_back(g);
  }
  state_ = std::make_shared<const State>(
      State{std::move(ring), std::move(generators), std::move(basis), std::move(reduced)});
}

Ideal Ideal::maximal(const QuotientRingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    vars.push_back(Polynomial::variable(ring->ambient(), i));
  }
  return Ideal(ring, std::move(vars));
}

Ideal Ideal::unit(const QuotientRingPtr& ring) {
  return Ideal(ring, {Polynomial::constant(ring->ambient(), 1)});
}

Ideal Ideal::zero(const QuotientRingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::parse(const QuotientRingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(ring->parse(g));
  return Ideal(ring, std::move(gens));
}

bool Ideal::inside_maximal() const {
  const Field& field = ring()->ambient()->field();
  return std::all_of(basis().elements().begin(), basis().elements().end(),
                     [&field](const Polynomial& g) { return field.is_zero(g.constant_term()); });
}

std::string Ideal::to_string() const {
  if (is_unit()) return "(1)";
  std::string out = "(";
  const auto& gens = reduced_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  if (gens.empty()) out += "0";
  return out + ")";
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.reduced_generators();
  gens.insert(gens.end(), b.reduced_generators().begin(), b.reduced_generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  const QuotientRing& ring = *a.ring();
  std::map<std::string, Polynomial> unique;
  for (const auto& f : a.reduced_generators()) {
    for (const auto& g : b.reduced_generators()) {
      Polynomial h = ring.reduce(f * g).monic();
      if (!h.is_zero()) unique.emplace(h.to_string(), std::move(h));
    }
  }
  std::vector<Polynomial> gens;
  gens.reserve(unique.size());
  for (auto& [key, h] : unique) gens.push_back(std::move(h));
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, unsigned n) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned i = 0; i < n; ++i) result = i == 0 ? a : product(result, a);
  return result;
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (contained_in_basis(a, b)) return a;
  if (contained_in_basis(b, a)) return b;
  return Ideal(a.ring(), intersect_generators(*a.ring(), a.basis().elements(),
                                              b.basis().elements()));
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  const QuotientRing& ring = *a.ring();
  Polynomial g = ring.reduce(f);
  if (a.contains(g)) return Ideal::unit(a.ring());
  std::vector<Polynomial> meet = intersect_generators(ring, a.basis().elements(), {g});
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.size());
  for (const auto& h : meet) quotients.push_back(exact_divide(h, g));
  return Ideal(a.ring(), std::move(quotients));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  if (b.is_zero()) throw MathError("colon by the zero ideal");
  if (b.is_unit()) return a;
  std::optional<Ideal> result;
  for (const auto& g : b.reduced_generators()) {
    Ideal c = colon(a, g);
    if (c.is_unit()) continue;
    result = result ? intersection(*result, c) : c;
  }
  return result ? *result : Ideal::unit(a.ring());
}

bool contains_local(const Ideal& b, const Polynomial& f) {
  if (b.contains(f)) return true;
  return !colon(b, f).inside_maximal();
}

bool contained_local(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  return std::all_of(a.reduced_generators().begin(), a.reduced_generators().end(),
                     [&b](const Polynomial& f) { return contains_local(b, f); });
}

bool equal_local(const Ideal& a, const Ideal& b) {
  check_same(a.ring(), b.ring());
  if (a == b) return true;
  return contained_local(a, b) && contained_local(b, a);
}

bool is_nonzerodivisor(const Polynomial& f, const QuotientRingPtr& ring) {
  Polynomial g = ring->reduce(f);
  if (g.is_zero()) throw MathError("zero element: " + f.to_string() + " lies in the relations");
  Ideal zero = Ideal::zero(ring);
  return contained_local(colon(zero, g), zero);
}

}  // namespace fullness
