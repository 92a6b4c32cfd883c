#include "efountain/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "efountain/fountain.hpp"

namespace efountain {

CorpusEntry rectangular_band(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "rectangular band needs n >= 1");
  const int size = n * n;
  auto index = [n](int i, int j) { return i * n + j; };
  std::vector<std::vector<Index>> table(size, std::vector<Index>(size));
  std::vector<std::string> labels(size);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1) {
      labels[index(i1, j1)] =
          "(" + std::to_string(i1 + 1) + "," + std::to_string(j1 + 1) + ")";
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          table[index(i1, j1)][index(i2, j2)] = index(i1, j2);
    }
  IndexSet diagonal;
  for (int i = 0; i < n; ++i) diagonal.push_back(index(i, i));

  CorpusEntry entry;
  entry.name = "rectangular_band_" + std::to_string(n);
  entry.semigroup = from_cayley_table(table, std::move(labels));
  entry.e_set = std::move(diagonal);
  entry.expected = {
      {"reducedEFountain", true},
      {"congruence", true},
      {"generalizedRightAmple", true},
      {"generalizedLeftAmple", true},
      {"rightAmple", n < 2},
      {"triLeftSymmetric", true},
      {"phiBasisInjective", n < 2},
  };
  return entry;
}

namespace {

// Partial injection on [n]: images[i] in {0, 1..n}, 0 meaning undefined,
// nonzero values pairwise distinct.
using PartialMap = std::vector<int>;

bool is_partial_injection(const PartialMap& rep) {
  std::vector<bool> used(rep.size() + 1, false);
  for (int v : rep) {
    if (v == 0) continue;
    if (used[v]) return false;
    used[v] = true;
  }
  return true;
}

PartialMap compose_partial(const PartialMap& f, const PartialMap& g) {
  PartialMap out(f.size(), 0);
  for (size_t i = 0; i < f.size(); ++i) {
    const int mid = g[i];
    if (mid != 0) out[i] = f[mid - 1];
  }
  return out;
}

std::string partial_label(const PartialMap& rep) {
  std::string out = "[";
  for (size_t i = 0; i < rep.size(); ++i) {
    if (i) out += ',';
    out += rep[i] == 0 ? "-" : std::to_string(rep[i]);
  }
  out += ']';
  return out;
}

}  // namespace

CorpusEntry symmetric_inverse_monoid(int n) {
  if (n < 0 || n > 4)
    fail(ErrorCode::degree_too_large, "symmetric inverse monoid bounded at n <= 4");

  std::vector<PartialMap> elements;
  PartialMap rep(n, 0);
  // Count up in base n+1 and keep the injective representatives.
  while (true) {
    if (is_partial_injection(rep)) elements.push_back(rep);
    int pos = n - 1;
    while (pos >= 0 && rep[pos] == n) rep[pos--] = 0;
    if (pos < 0) break;
    ++rep[pos];
  }

  std::map<PartialMap, Index> index_of;
  for (Index i = 0; i < static_cast<Index>(elements.size()); ++i)
    index_of.emplace(elements[i], i);

  const int size = static_cast<int>(elements.size());
  std::vector<std::vector<Index>> table(size, std::vector<Index>(size));
  std::vector<std::string> labels(size);
  IndexSet partial_identities;
  for (Index a = 0; a < size; ++a) {
    labels[a] = partial_label(elements[a]);
    bool identity_on_domain = true;
    for (int i = 0; i < n; ++i)
      if (elements[a][i] != 0 && elements[a][i] != i + 1) identity_on_domain = false;
    if (identity_on_domain) partial_identities.push_back(a);
    for (Index b = 0; b < size; ++b)
      table[a][b] = index_of.at(compose_partial(elements[a], elements[b]));
  }

  CorpusEntry entry;
  entry.name = "symmetric_inverse_monoid_" + std::to_string(n);
  entry.semigroup = from_cayley_table(table, std::move(labels));
  entry.e_set = std::move(partial_identities);
  entry.expected = {
      {"reducedEFountain", true},
      {"congruence", true},
      {"eEhresmann", true},
      {"rightAmple", true},
      {"generalizedRightAmple", true},
      {"isomorphism", true},
  };
  return entry;
}

namespace {

// Backtracking enumeration of associative tables, row-major cell order.
// After each assignment only the triples whose four lookups are all
// determined are checked.
class TableSearch {
 public:
  TableSearch(int order, const std::function<void(const CorpusEntry&)>& yield)
      : n_(order), table_(static_cast<size_t>(order) * order, -1), yield_(yield) {}

  void run() { place(0); }

 private:
  int at(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }

  bool consistent() const {
    // Associativity on every triple whose four lookups are determined.
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = at(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          const int bc = at(b, c);
          if (bc < 0) continue;
          const int left = at(ab, c), right = at(a, bc);
          if (left < 0 || right < 0) continue;
          if (left != right) return false;
        }
      }
    return true;
  }

  void place(int cell) {
    if (cell == n_ * n_) {
      emit();
      return;
    }
    for (int v = 0; v < n_; ++v) {
      table_[cell] = v;
      if (consistent()) place(cell + 1);
    }
    table_[cell] = -1;
  }

  void emit() {
    std::vector<std::vector<Index>> rows(n_, std::vector<Index>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) rows[a][b] = at(a, b);
    const FiniteSemigroup s = from_cayley_table(rows);
    const IndexSet idem = idempotents(s);
    const int table_id = table_count_++;
    for (unsigned mask = 1; mask < (1u << idem.size()); ++mask) {
      IndexSet e_set;
      for (size_t i = 0; i < idem.size(); ++i)
        if (mask & (1u << i)) e_set.push_back(idem[i]);
      FountainAnalysis analysis = analyze_reduced_e_fountain(s, e_set);
      if (!analysis.ok()) continue;
      if (!check_congruence_condition(*analysis.structure).holds) continue;
      std::ostringstream name;
      name << "order" << n_ << ".table" << table_id << ".E{";
      for (size_t i = 0; i < e_set.size(); ++i) name << (i ? "," : "") << e_set[i];
      name << '}';
      yield_(CorpusEntry{name.str(), s, e_set, {}});
    }
  }

  int n_;
  std::vector<int> table_;
  const std::function<void(const CorpusEntry&)>& yield_;
  int table_count_ = 0;
};

}  // namespace

void enumerate_structures(int max_order, const std::function<void(const CorpusEntry&)>& yield) {
  if (max_order < 1 || max_order > 4)
    fail(ErrorCode::degree_too_large, "enumeration bounded at order <= 4");
  for (int order = 1; order <= max_order; ++order) TableSearch(order, yield).run();
}

FiniteSemigroup left_zero_semigroup(int n) {
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[a][b] = a;
  return from_cayley_table(table);
}

FiniteSemigroup cyclic_group(int n) {
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return from_cayley_table(table);
}

FiniteSemigroup chain_semilattice(int n) {
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[a][b] = std::min(a, b);
  return from_cayley_table(table);
}

}  // namespace efountain
