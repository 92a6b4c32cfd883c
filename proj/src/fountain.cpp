#include "efountain/fountain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace efountain {

namespace {

std::string tuple_text(const FiniteSemigroup& s, std::initializer_list<std::pair<const char*, Index>> parts) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto& [name, idx] : parts) {
    if (!first) os << ", ";
    first = false;
    os << name << '=' << s.describe(idx);
  }
  os << ')';
  return os.str();
}

// Minimum of a set of idempotents under the natural partial order, if any.
std::optional<Index> natural_minimum(const FiniteSemigroup& s, const IndexSet& candidates) {
  for (Index e : candidates) {
    bool is_min = true;
    for (Index f : candidates) {
      if (!natural_leq(s, e, f)) {
        is_min = false;
        break;
      }
    }
    if (is_min) return e;
  }
  return std::nullopt;
}

}  // namespace

bool EFountainStructure::in_e_set(Index a) const {
  return std::binary_search(e_set.begin(), e_set.end(), a);
}

IndexSet right_identity_set(const FiniteSemigroup& s, const IndexSet& e_set, Index a) {
  IndexSet out;
  for (Index e : e_set)
    if (s.product(a, e) == a) out.push_back(e);
  return out;
}

IndexSet left_identity_set(const FiniteSemigroup& s, const IndexSet& e_set, Index a) {
  IndexSet out;
  for (Index e : e_set)
    if (s.product(e, a) == a) out.push_back(e);
  return out;
}

std::pair<BinaryRelation, BinaryRelation> tilde_relations(const FiniteSemigroup& s,
                                                          const IndexSet& e_set) {
  const int n = s.size();
  std::vector<IndexSet> right_ids(n), left_ids(n);
  for (Index a = 0; a < n; ++a) {
    right_ids[a] = right_identity_set(s, e_set, a);
    left_ids[a] = left_identity_set(s, e_set, a);
  }
  BinaryRelation l_tilde(n), r_tilde(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (right_ids[a] == right_ids[b]) l_tilde.insert(a, b);
      if (left_ids[a] == left_ids[b]) r_tilde.insert(a, b);
    }
  return {l_tilde, r_tilde};
}

FountainAnalysis analyze_reduced_e_fountain(const FiniteSemigroup& s, const IndexSet& e_set_in) {
  const int n = s.size();
  IndexSet e_set = e_set_in;
  std::sort(e_set.begin(), e_set.end());
  e_set.erase(std::unique(e_set.begin(), e_set.end()), e_set.end());
  for (Index e : e_set) {
    if (e < 0 || e >= n)
      fail(ErrorCode::index_out_of_range, "E-set index " + std::to_string(e) + " out of range");
    if (!is_idempotent(s, e))
      fail(ErrorCode::not_idempotent,
           "E-set element " + s.describe(e) + " is not idempotent");
  }

  std::vector<IndexSet> right_ids(n), left_ids(n);
  for (Index a = 0; a < n; ++a) {
    right_ids[a] = right_identity_set(s, e_set, a);
    left_ids[a] = left_identity_set(s, e_set, a);
  }

  FountainAnalysis result;
  std::optional<FountainDiagnostic> diagnostic;

  // Condition 1: every L~-class and R~-class meets E exactly once, and
  // ef = e <=> fe = e on E.
  bool unique_meets = true;
  for (Index a = 0; a < n && unique_meets; ++a) {
    int l_meets = 0, r_meets = 0;
    for (Index e : e_set) {
      if (right_ids[e] == right_ids[a]) ++l_meets;
      if (left_ids[e] == left_ids[a]) ++r_meets;
    }
    if (l_meets != 1 || r_meets != 1) {
      unique_meets = false;
      if (!diagnostic && (l_meets == 0 || r_meets == 0))
        diagnostic = FountainDiagnostic{
            ErrorCode::not_e_fountain,
            std::string(l_meets == 0 ? "L~" : "R~") + "-class of " + s.describe(a) +
                " contains no element of E"};
    }
  }
  bool reduced_identity = true;
  for (Index e : e_set) {
    for (Index f : e_set) {
      if ((s.product(e, f) == e) != (s.product(f, e) == e)) {
        reduced_identity = false;
        if (!diagnostic)
          diagnostic = FountainDiagnostic{
              ErrorCode::not_reduced,
              tuple_text(s, {{"e", e}, {"f", f}}) +
                  (s.product(e, f) == e ? ": ef = e but fe != e" : ": fe = e but ef != e")};
        break;
      }
    }
    if (!reduced_identity) break;
  }
  result.condition_unique_meets = unique_meets && reduced_identity;

  // Condition 2: every a_E and Ea has a minimum.
  std::vector<Index> star(n, -1), plus(n, -1);
  bool minima = true;
  for (Index a = 0; a < n; ++a) {
    auto min_right = natural_minimum(s, right_ids[a]);
    auto min_left = natural_minimum(s, left_ids[a]);
    if (!min_right || !min_left) {
      minima = false;
      if (!diagnostic)
        diagnostic = FountainDiagnostic{
            ErrorCode::not_e_fountain,
            (right_ids[a].empty() || left_ids[a].empty())
                ? "element " + s.describe(a) + " has no identity from E"
                : "identity set of " + s.describe(a) + " has no minimum"};
      break;
    }
    star[a] = *min_right;
    plus[a] = *min_left;
  }
  result.condition_minima = minima;

  // Condition 3: the eight identities for the derived star/plus (only
  // evaluable when the minima exist).
  bool identities = minima;
  if (minima) {
    auto t = [&](Index a, Index b) { return s.product(a, b); };
    for (Index a = 0; a < n && identities; ++a) {
      identities = t(plus[a], a) == a && plus[plus[a]] == plus[a] && t(a, star[a]) == a &&
                   star[star[a]] == star[a] && star[plus[a]] == plus[a] &&
                   plus[star[a]] == star[a];
      for (Index b = 0; b < n && identities; ++b) {
        const Index ab = t(a, b);
        identities = t(plus[a], plus[ab]) == plus[ab] && t(plus[ab], plus[a]) == plus[ab] &&
                     t(star[b], star[ab]) == star[ab] && t(star[ab], star[b]) == star[ab];
      }
    }
  }
  result.condition_identities = identities;

  if (result.condition_unique_meets != result.condition_minima ||
      result.condition_minima != result.condition_identities)
    fail(ErrorCode::internal_mismatch,
         "the three equivalent reduced E-Fountain conditions disagree: " +
             std::to_string(result.condition_unique_meets) + "/" +
             std::to_string(result.condition_minima) + "/" +
             std::to_string(result.condition_identities));

  if (result.condition_minima) {
    result.structure = EFountainStructure{s, e_set, std::move(star), std::move(plus)};
  } else {
    if (!diagnostic)
      fail(ErrorCode::internal_mismatch, "analysis failed without a diagnostic");
    result.diagnostic = diagnostic;
  }
  return result;
}

EFountainStructure require_reduced_e_fountain(const FiniteSemigroup& s, const IndexSet& e_set) {
  FountainAnalysis analysis = analyze_reduced_e_fountain(s, e_set);
  if (!analysis.ok()) fail(analysis.diagnostic->code, analysis.diagnostic->detail);
  return *std::move(analysis.structure);
}

CheckResult check_congruence_condition(const EFountainStructure& f) {
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();

  CheckResult by_identities{true, {}, ""};
  for (Index a = 0; a < n && by_identities.holds; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = s.product(a, b);
      if (f.star[ab] != f.star[s.product(f.star[a], b)]) {
        by_identities = {false, {a, b}, "(ab)* != (a*b)*"};
        break;
      }
      if (f.plus[ab] != f.plus[s.product(a, f.plus[b])]) {
        by_identities = {false, {a, b}, "(ab)+ != (ab+)+"};
        break;
      }
    }

  // Definitional route: L~ is a right congruence and R~ a left congruence.
  auto [l_tilde, r_tilde] = tilde_relations(s, f.e_set);
  bool by_definition = true;
  for (Index a = 0; a < n && by_definition; ++a)
    for (Index b = 0; b < n && by_definition; ++b) {
      if (l_tilde.contains(a, b))
        for (Index c = 0; c < n; ++c)
          if (!l_tilde.contains(s.product(a, c), s.product(b, c))) {
            by_definition = false;
            break;
          }
      if (by_definition && r_tilde.contains(a, b))
        for (Index c = 0; c < n; ++c)
          if (!r_tilde.contains(s.product(c, a), s.product(c, b))) {
            by_definition = false;
            break;
          }
    }

  if (by_identities.holds != by_definition)
    fail(ErrorCode::internal_mismatch,
         "congruence condition: identity route and congruence route disagree");
  return by_identities;
}

namespace {

void require_congruence(const EFountainStructure& f) {
  if (!check_congruence_condition(f).holds)
    fail(ErrorCode::congruence_required,
         "this check is only defined when the congruence condition holds");
}

}  // namespace

CheckResult check_right_ample(const EFountainStructure& f) {
  require_congruence(f);
  const FiniteSemigroup& s = f.semigroup;
  for (Index a = 0; a < s.size(); ++a)
    for (Index e : f.e_set) {
      const Index ea = s.product(e, a);
      if (ea != s.product(a, f.star[ea]))
        return {false, {a, e}, "ea != a(ea)*"};
    }
  return {true, {}, ""};
}

CheckResult check_left_ample(const EFountainStructure& f) {
  require_congruence(f);
  const FiniteSemigroup& s = f.semigroup;
  for (Index a = 0; a < s.size(); ++a)
    for (Index e : f.e_set) {
      const Index ae = s.product(a, e);
      if (ae != s.product(f.plus[ae], a))
        return {false, {a, e}, "ae != (ae)+a"};
    }
  return {true, {}, ""};
}

CheckResult check_generalized_right_ample(const EFountainStructure& f) {
  require_congruence(f);
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  auto t = [&](Index a, Index b) { return s.product(a, b); };

  CheckResult identity_form{true, {}, ""};
  for (Index a = 0; a < n && identity_form.holds; ++a)
    for (Index e : f.e_set) {
      for (Index g : f.e_set) {
        const Index x = t(a, f.star[t(t(e, a), g)]);  // a(eaf)*
        if (f.star[t(e, f.plus[x])] != f.plus[x]) {
          identity_form = {false, {a, e, g}, "(e(a(eaf)*)+)* != (a(eaf)*)+"};
          break;
        }
      }
      if (!identity_form.holds) break;
    }

  // Equivalent form 2: c tri_l ea implies (e(ac*)+)* = (ac*)+.
  bool implication_e = true;
  for (Index a = 0; a < n && implication_e; ++a)
    for (Index c = 0; c < n && implication_e; ++c)
      for (Index e : f.e_set) {
        if (c != t(t(e, a), f.star[c])) continue;
        const Index y = t(a, f.star[c]);
        if (f.star[t(e, f.plus[y])] != f.plus[y]) {
          implication_e = false;
          break;
        }
      }

  // Equivalent form 3: c tri_l ba implies (b(ac*)+)* = (ac*)+.
  bool implication_b = true;
  for (Index a = 0; a < n && implication_b; ++a)
    for (Index b = 0; b < n && implication_b; ++b)
      for (Index c = 0; c < n; ++c) {
        if (c != t(t(b, a), f.star[c])) continue;
        const Index y = t(a, f.star[c]);
        if (f.star[t(b, f.plus[y])] != f.plus[y]) {
          implication_b = false;
          break;
        }
      }

  if (identity_form.holds != implication_e || implication_e != implication_b)
    fail(ErrorCode::internal_mismatch,
         "the three equivalent generalized right ample forms disagree: " +
             std::to_string(identity_form.holds) + "/" + std::to_string(implication_e) +
             "/" + std::to_string(implication_b));
  return identity_form;
}

CheckResult check_generalized_left_ample(const EFountainStructure& f) {
  require_congruence(f);
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();
  auto t = [&](Index a, Index b) { return s.product(a, b); };

  CheckResult identity_form{true, {}, ""};
  for (Index a = 0; a < n && identity_form.holds; ++a)
    for (Index e : f.e_set) {
      for (Index g : f.e_set) {
        const Index x = t(f.plus[t(t(g, a), e)], a);  // (fae)+a
        if (f.plus[t(f.star[x], e)] != f.star[x]) {
          identity_form = {false, {a, e, g}, "(((fae)+a)*e)+ != ((fae)+a)*"};
          break;
        }
      }
      if (!identity_form.holds) break;
    }

  // Dual form 2: c tri_r ae implies ((c+a)*e)+ = (c+a)*.
  bool implication_e = true;
  for (Index a = 0; a < n && implication_e; ++a)
    for (Index c = 0; c < n && implication_e; ++c)
      for (Index e : f.e_set) {
        if (c != t(f.plus[c], t(a, e))) continue;
        const Index y = t(f.plus[c], a);
        if (f.plus[t(f.star[y], e)] != f.star[y]) {
          implication_e = false;
          break;
        }
      }

  // Dual form 3: c tri_r ab implies ((c+a)*b)+ = (c+a)*.
  bool implication_b = true;
  for (Index a = 0; a < n && implication_b; ++a)
    for (Index b = 0; b < n && implication_b; ++b)
      for (Index c = 0; c < n; ++c) {
        if (c != t(f.plus[c], t(a, b))) continue;
        const Index y = t(f.plus[c], a);
        if (f.plus[t(f.star[y], b)] != f.star[y]) {
          implication_b = false;
          break;
        }
      }

  if (identity_form.holds != implication_e || implication_e != implication_b)
    fail(ErrorCode::internal_mismatch,
         "the three equivalent generalized left ample forms disagree: " +
             std::to_string(identity_form.holds) + "/" + std::to_string(implication_e) +
             "/" + std::to_string(implication_b));
  return identity_form;
}

AmpleReport ample_report(const EFountainStructure& f) {
  return {check_right_ample(f), check_left_ample(f), check_generalized_right_ample(f),
          check_generalized_left_ample(f)};
}

bool check_subband(const FiniteSemigroup& s, const IndexSet& e_set) {
  for (Index e : e_set)
    for (Index g : e_set)
      if (!std::binary_search(e_set.begin(), e_set.end(), s.product(e, g)) ||
          !is_idempotent(s, s.product(e, g)))
        return false;
  return true;
}

bool check_subsemilattice(const FiniteSemigroup& s, const IndexSet& e_set) {
  if (!check_subband(s, e_set)) return false;
  for (Index e : e_set)
    for (Index g : e_set)
      if (s.product(e, g) != s.product(g, e)) return false;
  return true;
}

bool is_e_ehresmann(const EFountainStructure& f) {
  return check_congruence_condition(f).holds && check_subsemilattice(f.semigroup, f.e_set);
}

bool check_ehresmann_equivalence(const EFountainStructure& f) {
  if (!is_e_ehresmann(f))
    fail(ErrorCode::not_ehresmann, "structure is not E-Ehresmann");
  const bool right = check_right_ample(f).holds;
  const bool generalized = check_generalized_right_ample(f).holds;
  if (right != generalized)
    fail(ErrorCode::theorem_violation,
         "right ample and generalized right ample disagree on an E-Ehresmann structure");
  return right;
}

}  // namespace efountain
