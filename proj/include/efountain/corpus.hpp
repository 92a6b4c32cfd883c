#pragma once

#include <functional>
#include <map>
#include <string>

#include "efountain/semigroup.hpp"

namespace efountain {

/// A named (semigroup, E-set) instance; expected values record predicate
/// outcomes known in advance, keyed by check name.
struct CorpusEntry {
  std::string name;
  FiniteSemigroup semigroup;
  IndexSet e_set;
  std::map<std::string, bool> expected;
};

/// The n x n rectangular band (i1,j1)(i2,j2) = (i1,j2) with the diagonal
/// as E.
CorpusEntry rectangular_band(int n);

/// Partial injections on [n] under composition, E = partial identities.
/// Bounded at n <= 4.
CorpusEntry symmetric_inverse_monoid(int n);

/// Enumerates every associative Cayley table of order 1..max_order
/// (backtracking with associativity pruning, no isomorphism reduction) and,
/// for each, every nonempty subset E of idempotents for which the reduced
/// E-Fountain analysis and the congruence condition succeed. Bounded at
/// max_order <= 4.
void enumerate_structures(int max_order, const std::function<void(const CorpusEntry&)>& yield);

// Small helpers used as additional test instances.
FiniteSemigroup left_zero_semigroup(int n);
FiniteSemigroup cyclic_group(int n);
FiniteSemigroup chain_semilattice(int n);  // min on a chain

}  // namespace efountain
