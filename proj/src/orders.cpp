#include "efountain/orders.hpp"

#include <algorithm>
#include <deque>

namespace efountain {

BinaryRelation tri_left(const EFountainStructure& f) {
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  BinaryRelation by_definition(n);
  for (Index b = 0; b < n; ++b)
    for (Index e : f.e_set) by_definition.insert(s.product(b, e), b);
  BinaryRelation by_star(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a == s.product(b, f.star[a])) by_star.insert(a, b);
  if (!(by_definition == by_star))
    fail(ErrorCode::internal_mismatch, "tri_l definitions a = be and a = ba* disagree");
  return by_definition;
}

BinaryRelation tri_right(const EFountainStructure& f) {
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  BinaryRelation by_definition(n);
  for (Index b = 0; b < n; ++b)
    for (Index e : f.e_set) by_definition.insert(s.product(e, b), b);
  BinaryRelation by_plus(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a == s.product(f.plus[a], b)) by_plus.insert(a, b);
  if (!(by_definition == by_plus))
    fail(ErrorCode::internal_mismatch, "tri_r definitions a = eb and a = a+b disagree");
  return by_definition;
}

IndexSet tri_below(const EFountainStructure& f, Index a) {
  const FiniteSemigroup& s = f.semigroup;
  IndexSet out;
  for (Index c = 0; c < s.size(); ++c)
    if (c == s.product(a, f.star[c])) out.push_back(c);
  // Uniqueness lemma: c is determined by c* among elements tri_l-below a.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (f.star[out[i]] == f.star[out[j]])
        fail(ErrorCode::internal_mismatch,
             "distinct elements below " + s.describe(a) + " share a star");
  return out;
}

BinaryRelation leq_l(const EFountainStructure& f) {
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  BinaryRelation rel(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (natural_leq(s, f.star[a], f.star[b]) && a == s.product(b, f.star[a]))
        rel.insert(a, b);
  BinaryRelation tri = tri_left(f);
  if (!rel.subset_of(tri))
    fail(ErrorCode::internal_mismatch, "leq_l is not contained in tri_l");
  if (check_subsemilattice(s, f.e_set) && !(rel == tri))
    fail(ErrorCode::theorem_violation,
         "E is a subsemilattice but leq_l and tri_l differ");
  return rel;
}

OrderDiagnostics diagnose(const BinaryRelation& rel) {
  OrderDiagnostics d;
  const int n = rel.domain_size();
  d.reflexive = true;
  for (Index a = 0; a < n; ++a)
    if (!rel.contains(a, a)) {
      d.reflexive = false;
      d.reflexive_witness = a;
      break;
    }
  d.antisymmetric = true;
  for (Index a = 0; a < n && d.antisymmetric; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && rel.contains(a, b) && rel.contains(b, a)) {
        d.antisymmetric = false;
        d.antisymmetry_witness = {a, b};
        break;
      }
  d.transitive = true;
  for (Index a = 0; a < n && d.transitive; ++a)
    for (Index b = 0; b < n && d.transitive; ++b) {
      if (!rel.contains(a, b)) continue;
      for (Index c = 0; c < n; ++c)
        if (rel.contains(b, c) && !rel.contains(a, c)) {
          d.transitive = false;
          d.transitivity_witness = {a, b, c};
          break;
        }
    }
  d.is_partial_order = d.reflexive && d.antisymmetric && d.transitive;
  return d;
}

namespace {

// Shortest tri_l-path from source to target (both ends included).
std::vector<Index> relation_path(const BinaryRelation& rel, Index source, Index target) {
  const int n = rel.domain_size();
  std::vector<Index> parent(n, -1);
  std::deque<Index> queue{source};
  std::vector<bool> seen(n, false);
  seen[source] = true;
  while (!queue.empty()) {
    Index v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (Index w = 0; w < n; ++w)
      if (rel.contains(v, w) && !seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<Index> path;
  for (Index v = target; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

EmbeddingResult embedding_order(const EFountainStructure& f) {
  BinaryRelation tri = tri_left(f);
  if (is_R_trivial(f.semigroup)) {
    BinaryRelation leq_r = green_preorder(f.semigroup, GreenSide::R);
    if (!tri.subset_of(leq_r))
      fail(ErrorCode::theorem_violation, "tri_l not contained in <=_R on an R-trivial semigroup");
    if (!diagnose(leq_r).is_partial_order)
      fail(ErrorCode::internal_mismatch, "<=_R is not a partial order on an R-trivial semigroup");
    return {EmbeddingResult::Kind::leq_r, std::move(leq_r), {}};
  }
  BinaryRelation closure = tri.reflexive_transitive_closure();
  OrderDiagnostics d = diagnose(closure);
  if (d.antisymmetric) return {EmbeddingResult::Kind::closure, std::move(closure), {}};
  // A cycle through two distinct mutually reachable elements witnesses that
  // no containing partial order exists.
  auto [a, b] = *d.antisymmetry_witness;
  std::vector<Index> cycle = relation_path(tri, a, b);
  std::vector<Index> back = relation_path(tri, b, a);
  cycle.insert(cycle.end(), back.begin() + 1, back.end());
  return {EmbeddingResult::Kind::none, std::nullopt, std::move(cycle)};
}

bool is_principally_finite(const BinaryRelation& rel) {
  return rel.domain_size() >= 0;  // always true for a finite domain
}

}  // namespace efountain
