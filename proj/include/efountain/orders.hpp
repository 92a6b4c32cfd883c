#pragma once

#include <array>
#include <optional>
#include <vector>

#include "efountain/fountain.hpp"

namespace efountain {

/// a tri_l b iff a = be for some e in E; computed both from the definition
/// and from the characterization a = ba*, which must agree.
BinaryRelation tri_left(const EFountainStructure& f);

/// The dual relation: a tri_r b iff a = eb for some e in E (iff a = a+b).
BinaryRelation tri_right(const EFountainStructure& f);

/// { c : c tri_l a }, ascending. Distinct members have distinct stars
/// (uniqueness lemma); violated only by an internal bug.
IndexSet tri_below(const EFountainStructure& f, Index a);

/// a leq_l b iff a* <= b* and a = ba*. Always contained in tri_l; equal to
/// it when E is a subsemilattice (both facts are asserted).
BinaryRelation leq_l(const EFountainStructure& f);

struct OrderDiagnostics {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool is_partial_order = false;
  std::optional<Index> reflexive_witness;                 // a with !(a R a)
  std::optional<std::array<Index, 2>> antisymmetry_witness;  // a != b, aRb, bRa
  std::optional<std::array<Index, 3>> transitivity_witness;  // aRb, bRc, !(aRc)
};

/// Order-theoretic property flags with the first failing tuples.
OrderDiagnostics diagnose(const BinaryRelation& rel);

/// Result of embedding tri_l into a partial order on S.
/// - kind == leq_r: S is R-trivial and <=_R is returned.
/// - kind == closure: the reflexive-transitive closure of tri_l is
///   antisymmetric, hence the smallest containing partial order.
/// - kind == none: no containing partial order exists; cycle holds an
///   explicit tri_l-cycle (first element repeated at the end).
struct EmbeddingResult {
  enum class Kind { leq_r, closure, none } kind = Kind::none;
  std::optional<BinaryRelation> order;
  std::vector<Index> cycle;

  bool ok() const { return kind != Kind::none; }
};

EmbeddingResult embedding_order(const EFountainStructure& f);

/// Trivially true for finite semigroups; mirrors the finiteness hypothesis
/// of the isomorphism theorem.
bool is_principally_finite(const BinaryRelation& rel);

}  // namespace efountain
