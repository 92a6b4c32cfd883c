#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efountain/semigroup.hpp"

namespace efountain {

/// Semigroup together with a distinguished set E of idempotents and the
/// derived unary operations a -> a* (minimum right identity from E) and
/// a -> a+ (minimum left identity from E). Only produced by a successful
/// analyze_reduced_e_fountain run, so the defining identities hold.
struct EFountainStructure {
  FiniteSemigroup semigroup;
  IndexSet e_set;
  std::vector<Index> star;
  std::vector<Index> plus;

  int size() const { return semigroup.size(); }
  Index product(Index a, Index b) const { return semigroup.product(a, b); }
  bool in_e_set(Index a) const;
};

/// Right identities of a from E: { e in E : ae = a }.
IndexSet right_identity_set(const FiniteSemigroup& s, const IndexSet& e_set, Index a);

/// Left identities of a from E: { e in E : ea = a }.
IndexSet left_identity_set(const FiniteSemigroup& s, const IndexSet& e_set, Index a);

/// (L~, R~): a L~ b iff a and b have the same right identities from E,
/// a R~ b iff they have the same left identities.
std::pair<BinaryRelation, BinaryRelation> tilde_relations(const FiniteSemigroup& s,
                                                          const IndexSet& e_set);

struct FountainDiagnostic {
  ErrorCode code;  // not_e_fountain or not_reduced
  std::string detail;
};

/// Outcome of analyze_reduced_e_fountain. The three equivalent conditions
/// of the defining proposition are evaluated independently; a disagreement
/// is an internal bug and throws InternalMismatch.
struct FountainAnalysis {
  std::optional<EFountainStructure> structure;
  std::optional<FountainDiagnostic> diagnostic;
  bool condition_unique_meets = false;  // classes meet E exactly once + ef=e <=> fe=e
  bool condition_minima = false;        // every a_E and Ea has a natural-order minimum
  bool condition_identities = false;    // the eight star/plus identities

  bool ok() const { return structure.has_value(); }
};

/// Decides whether (S, E) is a reduced E-Fountain semigroup.
/// Throws NotIdempotent when E contains a non-idempotent.
FountainAnalysis analyze_reduced_e_fountain(const FiniteSemigroup& s, const IndexSet& e_set);

/// Like analyze_reduced_e_fountain but throws NotEFountain / NotReduced on
/// failure and returns the structure directly.
EFountainStructure require_reduced_e_fountain(const FiniteSemigroup& s, const IndexSet& e_set);

/// A failed check carries the lexicographically first failing tuple.
struct CheckResult {
  bool holds = false;
  std::vector<Index> witness;  // empty when holds
  std::string witness_kind;

  explicit operator bool() const { return holds; }
};

/// The identities (ab)* = (a*b)* and (ab)+ = (ab+)+, cross-checked against
/// the definitional statement that L~ is a right congruence and R~ a left
/// congruence. Witness is the first failing pair (a, b).
CheckResult check_congruence_condition(const EFountainStructure& f);

/// ea = a(ea)* for all a in S, e in E. Witness (a, e).
/// Throws CongruenceConditionRequired unless the congruence condition holds.
CheckResult check_right_ample(const EFountainStructure& f);

/// ae = (ae)+a for all a in S, e in E. Witness (a, e).
CheckResult check_left_ample(const EFountainStructure& f);

/// (e(a(eaf)*)+)* = (a(eaf)*)+ for all a in S and e, f in E.
/// The two equivalent implication forms are evaluated independently and must
/// agree with the identity form. Witness (a, e, f).
CheckResult check_generalized_right_ample(const EFountainStructure& f);

/// (((fae)+a)*e)+ = ((fae)+a)* for all a in S and e, f in E. Witness (a, e, f).
CheckResult check_generalized_left_ample(const EFountainStructure& f);

struct AmpleReport {
  CheckResult right_ample;
  CheckResult left_ample;
  CheckResult generalized_right_ample;
  CheckResult generalized_left_ample;
};

AmpleReport ample_report(const EFountainStructure& f);

/// E closed under products.
bool check_subband(const FiniteSemigroup& s, const IndexSet& e_set);

/// E closed under products and commuting.
bool check_subsemilattice(const FiniteSemigroup& s, const IndexSet& e_set);

/// Reduced E-Fountain + congruence condition + E a subsemilattice.
bool is_e_ehresmann(const EFountainStructure& f);

/// For E-Ehresmann structures the right ample and generalized right ample
/// conditions are equivalent; asserts this and returns the shared value.
/// Throws NotEhresmann when f is not E-Ehresmann.
bool check_ehresmann_equivalence(const EFountainStructure& f);

}  // namespace efountain
