#pragma once

#include <functional>
#include <string>
#include <vector>

#include "efountain/ring.hpp"
#include "efountain/semigroup.hpp"

namespace efountain {

enum class CheckStatus { pass, fail, skipped };

const char* check_status_name(CheckStatus status);

struct CheckLine {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;  // empty when there is nothing to report
};

/// Deterministic per-structure report; rendered as one
/// "checkName: STATUS [witness]" line per check.
struct Report {
  std::string structure_name;
  std::vector<CheckLine> lines;

  int fail_count() const;
  std::string to_text() const;
};

/// Runs the full pipeline (fountain, orders, category, algebra) on (S, E)
/// over the selected coefficient ring. Checks whose preconditions fail
/// upstream are reported as SKIPPED.
Report analyze_structure(const FiniteSemigroup& s, const IndexSet& e_set, const RingSpec& ring,
                         const std::string& name);

/// Theorem-by-theorem verification of the Catalan monoid at this degree.
Report catalan_report(int degree, const RingSpec& ring);

/// Enumerates structures up to max_order and reports, per entry, the
/// main-theorem biconditional (and the Ehresmann equivalence whenever E is
/// a subsemilattice). Lines are also streamed through `sink` as they are
/// produced, when given.
Report search_report(int max_order, const std::function<void(const std::string&)>& sink = {});

}  // namespace efountain
