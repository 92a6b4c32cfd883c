#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efountain/fountain.hpp"
#include "efountain/ring.hpp"
#include "efountain/semigroup.hpp"

namespace efountain {

// The Catalan monoid CT_d of order-preserving, order-increasing maps on
// [d]. The paper indexes it as CT_{n+1} with subsets of [n]; here d is the
// ambient degree and n = d - 1, so subsets live in [d-1] and the top point
// d is the "overflow" value of the pair formulas. Subsets of [d-1] are
// stored as bitmasks (bit i-1 represents the point i).

using SubsetMask = std::uint32_t;

std::string subset_text(SubsetMask mask);

/// CT_d together with the (X, Y) pair attached to each element:
/// Y = im(f) \ {d}, and X collects the per-value maxima.
struct CatalanMonoid {
  int degree = 0;
  FiniteSemigroup semigroup;
  std::vector<Transformation> elements;               // by element index
  std::vector<std::pair<SubsetMask, SubsetMask>> pairs;  // (X, Y) per element
  std::vector<Index> idempotent_of_mask;              // Z -> index of e_Z

  int size() const { return semigroup.size(); }
};

/// Enumerates CT_d directly from the defining inequalities, in lexicographic
/// image-tuple order. Throws DegreeTooLarge outside 1 <= d <= 8.
CatalanMonoid generate_catalan(int degree);

/// e_Z(i) = min{ z in Z u {d} : i <= z }; the idempotent attached to Z.
Transformation catalan_e_z(SubsetMask z, int degree);

/// f_{X,Y} by the interval formula; requires |X| = |Y| and X elementwise
/// below Y (throws NotComparable otherwise).
Transformation catalan_f_from_pair(SubsetMask x, SubsetMask y, int degree);

/// Recovers (X, Y) from an element of CT_d.
std::pair<SubsetMask, SubsetMask> catalan_pair_from_f(const Transformation& f);

/// Z is a partial cross section of f: d is not in f(Z) and f restricted to
/// Z is injective.
bool is_pcs(const Transformation& f, SubsetMask z);

/// g is a multi cross section of Z: every z in Z is hit by e_Z g.
bool is_mcs(const Transformation& g, SubsetMask z);

/// X preceq Y on subsets of equal size, compared elementwise in sorted order.
bool subset_preceq(SubsetMask x, SubsetMask y);

/// The poset preceq_n over all subsets of [n], indexed by bitmask.
struct SubsetPoset {
  int n = 0;
  BinaryRelation relation;  // domain 2^n
};

/// Builds preceq_n; the number of comparable pairs is the (n+1)-st Catalan
/// number (asserted).
SubsetPoset build_preceq(int n);

/// Catalan numbers by the convolution recurrence.
std::uint64_t catalan_number(int n);

/// Asserts (f_{X,Y})* = e_X and (f_{X,Y})+ = e_Y for every element, plus the
/// kernel/image characterizations of the tilde relations.
CheckResult star_plus_check(const CatalanMonoid& m, const EFountainStructure& f);

/// One pipeline stage of verify_catalan_isomorphism.
struct CatalanStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CatalanVerification {
  int degree = 0;
  std::vector<CatalanStage> stages;

  bool ok() const;
};

/// Full verification of the Catalan isomorphism pipeline at the given
/// degree over the given ring. Throws DegreeTooLarge outside 1 <= d <= 7.
CatalanVerification verify_catalan_isomorphism(int degree, const RingSpec& ring);

}  // namespace efountain
