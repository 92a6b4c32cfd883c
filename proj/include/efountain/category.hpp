#pragma once

#include <string>
#include <vector>

#include "efountain/fountain.hpp"

namespace efountain {

/// The category C(S) of a reduced E-Fountain semigroup satisfying the
/// congruence condition. Objects are the elements of E (identified by their
/// semigroup index), morphisms are the elements of S: C(a) runs from a* to
/// a+, and C(b)C(a) = C(ba) exactly when b* = a+.
class FiniteCategory {
 public:
  static constexpr Index undefined = -1;

  const IndexSet& objects() const { return objects_; }
  int morphism_count() const { return morphisms_; }

  Index dom(Index m) const { return dom_[m]; }
  Index cod(Index m) const { return cod_[m]; }

  bool defined(Index after, Index first) const {
    return comp_[static_cast<size_t>(after) * morphisms_ + first] != undefined;
  }

  /// Composite "after o first", or `undefined`.
  Index compose(Index after, Index first) const {
    return comp_[static_cast<size_t>(after) * morphisms_ + first];
  }

  /// The identity morphism at an object is the object's own index.
  Index identity_at(Index object) const { return object; }

  friend FiniteCategory build_category(const EFountainStructure& f);

 private:
  IndexSet objects_;
  int morphisms_ = 0;
  std::vector<Index> dom_, cod_;
  std::vector<Index> comp_;  // dense morphisms x morphisms, `undefined` sentinel
};

/// Builds C(S) and verifies the category axioms exhaustively (identity laws,
/// dom/cod closure of composition, associativity). Throws
/// CongruenceConditionRequired, or AxiomFailure on an internal bug.
FiniteCategory build_category(const EFountainStructure& f);

/// Text dump: an "objects:" line, then one "m: dom -> cod" line per morphism.
std::string dump_category(const FiniteCategory& c);

}  // namespace efountain
