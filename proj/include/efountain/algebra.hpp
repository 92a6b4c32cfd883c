#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "efountain/category.hpp"
#include "efountain/orders.hpp"
#include "efountain/ring.hpp"

namespace efountain {

enum class BasisKind { semigroup, category };

/// Sparse linear combination of basis elements (semigroup elements or
/// morphisms) with coefficients in R; zero coefficients are never stored.
template <typename R>
struct AlgebraElement {
  BasisKind basis = BasisKind::semigroup;
  std::map<Index, typename R::Elem> coeffs;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

template <typename R>
void add_scaled_term(AlgebraElement<R>& x, Index b, const typename R::Elem& c, const R& ring) {
  if (ring.is_zero(c)) return;
  auto it = x.coeffs.find(b);
  if (it == x.coeffs.end()) {
    x.coeffs.emplace(b, c);
    return;
  }
  it->second = ring.add(it->second, c);
  if (ring.is_zero(it->second)) x.coeffs.erase(it);
}

template <typename R>
AlgebraElement<R> basis_element(BasisKind basis, Index b, const R& ring) {
  AlgebraElement<R> x{basis, {}};
  x.coeffs.emplace(b, ring.one());
  return x;
}

template <typename R>
AlgebraElement<R> add(const AlgebraElement<R>& x, const AlgebraElement<R>& y, const R& ring) {
  if (x.basis != y.basis) fail(ErrorCode::basis_mismatch, "adding over different bases");
  AlgebraElement<R> out = x;
  for (const auto& [b, c] : y.coeffs) add_scaled_term(out, b, c, ring);
  return out;
}

template <typename R>
AlgebraElement<R> scale(const typename R::Elem& k, const AlgebraElement<R>& x, const R& ring) {
  AlgebraElement<R> out{x.basis, {}};
  for (const auto& [b, c] : x.coeffs) add_scaled_term(out, b, ring.mul(k, c), ring);
  return out;
}

/// Bilinear extension of the semigroup multiplication.
template <typename R>
AlgebraElement<R> semigroup_mult(const FiniteSemigroup& s, const AlgebraElement<R>& x,
                                 const AlgebraElement<R>& y, const R& ring) {
  if (x.basis != BasisKind::semigroup || y.basis != BasisKind::semigroup)
    fail(ErrorCode::basis_mismatch, "semigroup_mult needs semigroup-basis operands");
  AlgebraElement<R> out{BasisKind::semigroup, {}};
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs)
      add_scaled_term(out, s.product(a, b), ring.mul(ca, cb), ring);
  return out;
}

/// Bilinear extension of morphism composition; non-composable products
/// contribute zero.
template <typename R>
AlgebraElement<R> category_mult(const FiniteCategory& c, const AlgebraElement<R>& x,
                                const AlgebraElement<R>& y, const R& ring) {
  if (x.basis != BasisKind::category || y.basis != BasisKind::category)
    fail(ErrorCode::basis_mismatch, "category_mult needs category-basis operands");
  AlgebraElement<R> out{BasisKind::category, {}};
  for (const auto& [m2, c2] : x.coeffs)
    for (const auto& [m1, c1] : y.coeffs)
      if (c.defined(m2, m1)) add_scaled_term(out, c.compose(m2, m1), ring.mul(c2, c1), ring);
  return out;
}

/// tri_below(a) for every a, computed once.
std::vector<IndexSet> tri_below_table(const EFountainStructure& f);

/// phi(a) = sum of C(c) over c tri_l a, extended linearly.
/// Throws CongruenceConditionRequired.
template <typename R>
AlgebraElement<R> phi(const EFountainStructure& f, const AlgebraElement<R>& x, const R& ring) {
  if (x.basis != BasisKind::semigroup)
    fail(ErrorCode::basis_mismatch, "phi expects a semigroup-basis element");
  if (!check_congruence_condition(f).holds)
    fail(ErrorCode::congruence_required, "phi requires the congruence condition");
  AlgebraElement<R> out{BasisKind::category, {}};
  for (const auto& [a, ca] : x.coeffs)
    for (Index c : tri_below(f, a)) add_scaled_term(out, c, ca, ring);
  return out;
}

/// First pair of distinct basis elements with equal phi-images, if any.
/// A collision shows phi is not injective.
std::optional<std::pair<Index, Index>> phi_basis_collision(const EFountainStructure& f);

struct HomomorphismResult {
  bool holds = false;
  std::vector<Index> witness;  // (a, b) with phi(ab) != phi(a)phi(b)
};

/// Checks phi(ab) = phi(a)phi(b) on all basis pairs (bilinearity makes this
/// sufficient) and asserts the result equals the generalized right ample
/// check, per the main theorem. Throws TheoremViolation on disagreement.
template <typename R>
HomomorphismResult verify_homomorphism(const EFountainStructure& f, const FiniteCategory& c,
                                       const R& ring) {
  if (!check_congruence_condition(f).holds)
    fail(ErrorCode::congruence_required, "verify_homomorphism requires the congruence condition");
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  const std::vector<IndexSet> below = tri_below_table(f);
  std::vector<AlgebraElement<R>> phi_of(n);
  for (Index a = 0; a < n; ++a) {
    phi_of[a].basis = BasisKind::category;
    for (Index x : below[a]) phi_of[a].coeffs.emplace(x, ring.one());
  }
  HomomorphismResult result{true, {}};
  for (Index a = 0; a < n && result.holds; ++a)
    for (Index b = 0; b < n; ++b) {
      AlgebraElement<R> rhs = category_mult(c, phi_of[a], phi_of[b], ring);
      if (!(rhs == phi_of[s.product(a, b)])) {
        result = {false, {a, b}};
        break;
      }
    }
  const bool ample = check_generalized_right_ample(f).holds;
  if (result.holds != ample)
    fail(ErrorCode::theorem_violation,
         "phi-homomorphism and generalized right ample disagree (ring " + ring.name() + ")");
  return result;
}

/// Function on the comparable pairs of a finite partial order.
template <typename R>
struct IncidenceElement {
  BinaryRelation order;
  std::map<std::pair<Index, Index>, typename R::Elem> values;  // support within order
};

void require_partial_order(const BinaryRelation& order);

/// A linear extension of the partial order (smallest index first among
/// available elements), used for Mobius recursion.
std::vector<Index> topological_order(const BinaryRelation& order);

template <typename R>
typename R::Elem incidence_value(const IncidenceElement<R>& x, Index a, Index b, const R& ring) {
  auto it = x.values.find({a, b});
  return it == x.values.end() ? ring.zero() : it->second;
}

template <typename R>
IncidenceElement<R> incidence_delta(const BinaryRelation& order, const R& ring) {
  require_partial_order(order);
  IncidenceElement<R> out{order, {}};
  for (Index a = 0; a < order.domain_size(); ++a) out.values.emplace(std::pair{a, a}, ring.one());
  return out;
}

/// The zeta function of the order itself: 1 on every comparable pair.
template <typename R>
IncidenceElement<R> incidence_zeta(const BinaryRelation& order, const R& ring) {
  require_partial_order(order);
  IncidenceElement<R> out{order, {}};
  for (auto [a, b] : order.pairs()) out.values.emplace(std::pair{a, b}, ring.one());
  return out;
}

/// zeta_l(a, b) = 1 if a tri_l b, 0 otherwise, as an element of the
/// incidence algebra of the containing order. Throws NotContained when
/// tri_l is not a subrelation of the order.
template <typename R>
IncidenceElement<R> zeta_l(const EFountainStructure& f, const BinaryRelation& order,
                           const R& ring) {
  require_partial_order(order);
  BinaryRelation tri = tri_left(f);
  if (!tri.subset_of(order))
    fail(ErrorCode::not_contained, "tri_l is not contained in the given partial order");
  IncidenceElement<R> out{order, {}};
  for (auto [a, b] : tri.pairs()) out.values.emplace(std::pair{a, b}, ring.one());
  return out;
}

/// Convolution product f*g(a,b) = sum over a <= c <= b of f(a,c)g(c,b).
template <typename R>
IncidenceElement<R> star_product(const IncidenceElement<R>& x, const IncidenceElement<R>& y,
                                 const R& ring) {
  if (!(x.order == y.order))
    fail(ErrorCode::basis_mismatch, "star product of elements over different posets");
  const int n = x.order.domain_size();
  IncidenceElement<R> out{x.order, {}};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (!x.order.contains(a, b)) continue;
      typename R::Elem sum = ring.zero();
      for (Index c = 0; c < n; ++c)
        if (x.order.contains(a, c) && x.order.contains(c, b))
          sum = ring.add(sum, ring.mul(incidence_value(x, a, c, ring),
                                       incidence_value(y, c, b, ring)));
      if (!ring.is_zero(sum)) out.values.emplace(std::pair{a, b}, std::move(sum));
    }
  return out;
}

/// Two-sided inverse under the convolution product, computed by forward
/// substitution along a linear extension. Throws NonInvertibleDiagonal when
/// some f(x, x) is not a unit of the ring.
template <typename R>
IncidenceElement<R> mobius_inverse(const IncidenceElement<R>& x, const R& ring) {
  require_partial_order(x.order);
  const int n = x.order.domain_size();
  std::vector<typename R::Elem> diag_inv(n, ring.zero());
  for (Index a = 0; a < n; ++a)
    if (!ring.try_invert(diag_inv[a], incidence_value(x, a, a, ring)))
      fail(ErrorCode::non_invertible_diagonal,
           "diagonal value at " + std::to_string(a) + " is not invertible in " + ring.name());

  IncidenceElement<R> out{x.order, {}};
  const std::vector<Index> topo = topological_order(x.order);
  for (Index b : topo)
    for (Index a = 0; a < n; ++a) {
      if (!x.order.contains(a, b)) continue;
      if (a == b) {
        out.values.emplace(std::pair{a, a}, diag_inv[a]);
        continue;
      }
      // g(a,b) = -(sum over a <= c < b of g(a,c) f(c,b)) / f(b,b)
      typename R::Elem sum = ring.zero();
      for (Index c = 0; c < n; ++c)
        if (c != b && x.order.contains(a, c) && x.order.contains(c, b))
          sum = ring.add(sum, ring.mul(incidence_value(out, a, c, ring),
                                       incidence_value(x, c, b, ring)));
      typename R::Elem value = ring.mul(ring.neg(sum), diag_inv[b]);
      if (!ring.is_zero(value)) out.values.emplace(std::pair{a, b}, std::move(value));
    }
  return out;
}

/// Precomputed change of basis between kS and kC along a containing partial
/// order: phi from the tri_l supports, psi from the inverse zeta function.
template <typename R>
class ChangeOfBasis {
 public:
  ChangeOfBasis(const EFountainStructure& f, const BinaryRelation& order, const R& ring)
      : f_(&f), order_(order), ring_(ring), zeta_inv_(mobius_inverse(zeta_l(f, order, ring), ring)) {
    if (!check_congruence_condition(f).holds)
      fail(ErrorCode::congruence_required, "change of basis requires the congruence condition");
    below_ = tri_below_table(f);
  }

  const IncidenceElement<R>& zeta_inverse() const { return zeta_inv_; }

  AlgebraElement<R> apply_phi(const AlgebraElement<R>& x) const {
    if (x.basis != BasisKind::semigroup)
      fail(ErrorCode::basis_mismatch, "phi expects a semigroup-basis element");
    AlgebraElement<R> out{BasisKind::category, {}};
    for (const auto& [a, ca] : x.coeffs)
      for (Index c : below_[a]) add_scaled_term(out, c, ca, ring_);
    return out;
  }

  AlgebraElement<R> apply_psi(const AlgebraElement<R>& y) const {
    if (y.basis != BasisKind::category)
      fail(ErrorCode::basis_mismatch, "psi expects a category-basis element");
    AlgebraElement<R> out{BasisKind::semigroup, {}};
    for (const auto& [a, ca] : y.coeffs)
      for (Index b = 0; b < order_.domain_size(); ++b)
        if (order_.contains(b, a))
          add_scaled_term(out, b, ring_.mul(ca, incidence_value(zeta_inv_, b, a, ring_)), ring_);
    return out;
  }

 private:
  const EFountainStructure* f_;
  BinaryRelation order_;
  R ring_;
  IncidenceElement<R> zeta_inv_;
  std::vector<IndexSet> below_;
};

/// psi(C(a)) = sum over b <= a of zeta_l^{-1}(b, a) b, extended linearly.
template <typename R>
AlgebraElement<R> psi(const EFountainStructure& f, const BinaryRelation& order,
                      const AlgebraElement<R>& y, const R& ring) {
  return ChangeOfBasis<R>(f, order, ring).apply_psi(y);
}

struct IsomorphismResult {
  bool holds = false;
  enum class Reason {
    ok,
    no_embedding,
    not_homomorphism,
    change_of_basis_failed,
  } reason = Reason::ok;
  std::string detail;
};

/// phi is an isomorphism of k-algebras iff it is a homomorphism and the
/// change of basis inverts it both ways. The containing partial order is
/// computed internally; an embedding failure is reported, not thrown.
template <typename R>
IsomorphismResult verify_isomorphism(const EFountainStructure& f, const FiniteCategory& c,
                                     const R& ring) {
  EmbeddingResult embedding = embedding_order(f);
  if (!embedding.ok()) {
    std::ostringstream os;
    os << "tri_l is not contained in any partial order; cycle:";
    for (Index v : embedding.cycle) os << ' ' << f.semigroup.describe(v);
    return {false, IsomorphismResult::Reason::no_embedding, os.str()};
  }
  HomomorphismResult hom = verify_homomorphism(f, c, ring);
  if (!hom.holds) {
    std::ostringstream os;
    os << "phi(ab) != phi(a)phi(b) at (a=" << f.semigroup.describe(hom.witness[0])
       << ", b=" << f.semigroup.describe(hom.witness[1]) << ")";
    return {false, IsomorphismResult::Reason::not_homomorphism, os.str()};
  }
  ChangeOfBasis<R> basis_change(f, *embedding.order, ring);
  for (Index a = 0; a < f.size(); ++a) {
    const auto unit_s = basis_element(BasisKind::semigroup, a, ring);
    const auto unit_c = basis_element(BasisKind::category, a, ring);
    if (!(basis_change.apply_psi(basis_change.apply_phi(unit_s)) == unit_s))
      return {false, IsomorphismResult::Reason::change_of_basis_failed,
              "psi(phi(" + f.semigroup.describe(a) + ")) differs from the basis element"};
    if (!(basis_change.apply_phi(basis_change.apply_psi(unit_c)) == unit_c))
      return {false, IsomorphismResult::Reason::change_of_basis_failed,
              "phi(psi(C(" + f.semigroup.describe(a) + "))) differs from the basis element"};
  }
  const char* via = embedding.kind == EmbeddingResult::Kind::leq_r ? "leqR" : "closure";
  return {true, IsomorphismResult::Reason::ok, std::string("order=") + via};
}

}  // namespace efountain
