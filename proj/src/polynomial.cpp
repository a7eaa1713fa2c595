#include "fullness/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fullness {

namespace {

// Merge two descending term lists, a + scale*b where b's monomials are first
// multiplied by `shift`.
std::vector<Term> merge_scaled(const PolyRing& ring, std::span<const Term> a,
                               std::span<const Term> b, const Monomial* shift,
                               const Coefficient& scale) {
  const Field& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = shift ? b[j].monomial * *shift : b[j].monomial;
      have_bm = true;
    }
    Ordering cmp;
    if (i == a.size()) {
      cmp = Ordering::kLT;
    } else if (j == b.size()) {
      cmp = Ordering::kGT;
    } else {
      cmp = ring.compare(a[i].monomial, bm);
    }
    if (cmp == Ordering::kGT) {
      out.push_back(a[i++]);
    } else if (cmp == Ordering::kLT) {
      out.push_back(Term{bm, field.mul(scale, b[j].coefficient)});
      ++j;
      have_bm = false;
    } else {
      Coefficient c = field.add(a[i].coefficient, field.mul(scale, b[j].coefficient));
      if (!field.is_zero(c)) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const PolyRing& r = *ring_;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) == Ordering::kGT;
  });
  const Field& field = r.field();
  for (auto& t : terms) {
    if (t.monomial.size() != r.num_variables()) {
      throw std::invalid_argument("monomial length does not match the ring");
    }
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient = field.add(terms_.back().coefficient, t.coefficient);
      if (field.is_zero(terms_.back().coefficient)) terms_.pop_back();
    } else if (!field.is_zero(t.coefficient)) {
      terms_.push_back(std::move(t));
    }
  }
}

std::vector<Term> subtract_scaled(const PolyRing& ring, std::span<const Term> a,
                                  const Monomial& shift, const Coefficient& c,
                                  std::span<const Term> b) {
  return merge_scaled(ring, a, b, &shift, ring.field().neg(c));
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long long value) {
  Coefficient c = ring->field().from_int(value);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& value) {
  Monomial one(ring->num_variables());
  return term(std::move(ring), one, value);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->num_variables(), index);
  Coefficient one = ring->field().one();
  return term(std::move(ring), m, one);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Coefficient& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->num_variables()) {
    throw std::invalid_argument("monomial length does not match the ring");
  }
  if (!p.field().is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.monomial.degree());
  return d;
}

Coefficient Polynomial::constant_term() const {
  // The constant monomial is the minimum of every admissible order.
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return field().zero();
}

Polynomial Polynomial::linear_part() const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == 1) p.terms_.push_back(t);
  }
  return p;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(ring_ && other.ring_ && ring_->compatible(*other.ring_) &&
                                ring_->order() == other.ring_->order())) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial, field().neg(t.coefficient)});
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial p(a.ring_);
  p.terms_ = merge_scaled(*a.ring_, a.terms_, b.terms_, nullptr, a.field().one());
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial p(a.ring_);
  p.terms_ = merge_scaled(*a.ring_, a.terms_, b.terms_, nullptr, a.field().from_int(-1));
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial p(a.ring_);
  for (const auto& t : small.terms_) {
    p.terms_ = merge_scaled(*a.ring_, p.terms_, large.terms_, &t.monomial, t.coefficient);
  }
  return p;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial p(ring_);
  if (field().is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial, field().mul(c, t.coefficient)});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coefficient& c) const {
  Polynomial p(ring_);
  if (field().is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) {
    p.terms_.push_back(Term{t.monomial * m, field().mul(c, t.coefficient)});
  }
  return p;
}

Polynomial Polynomial::minus_term_times(const Monomial& m, const Coefficient& c,
                                        const Polynomial& other) const {
  check_ring(other);
  Polynomial p(ring_);
  p.terms_ = merge_scaled(*ring_, terms_, other.terms_, &m, field().neg(c));
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || field().is_one(leading_coefficient())) return *this;
  return scaled(field().inv(leading_coefficient()));
}

Polynomial Polynomial::mapped(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->num_variables()) {
    throw std::invalid_argument("variable map has the wrong length");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->num_variables());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] != 0) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    out.push_back(Term{m, t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !a.field().equal(a.terms_[i].coefficient, b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = f.prints_negative(t.coefficient);
    Coefficient magnitude = negative ? f.neg(t.coefficient) : t.coefficient;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      std::uint32_t e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += f.to_string(magnitude);
    } else if (f.is_one(magnitude)) {
      out += mono;
    } else {
      out += f.to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

}  // namespace fullness
