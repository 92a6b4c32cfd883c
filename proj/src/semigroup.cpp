#include "efountain/semigroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>

namespace efountain {

size_t BinaryRelation::pair_count() const {
  size_t count = 0;
  for (bool b : bits_) count += b ? 1 : 0;
  return count;
}

std::vector<std::pair<Index, Index>> BinaryRelation::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation out(n_);
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b)) out.insert(b, a);
  return out;
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  if (other.n_ != n_) fail(ErrorCode::invalid_argument, "relation domain sizes differ");
  BinaryRelation out(n_);
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b) && other.contains(a, b)) out.insert(a, b);
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  if (other.n_ != n_) fail(ErrorCode::invalid_argument, "relation domain sizes differ");
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b) && !other.contains(a, b)) return false;
  return true;
}

bool BinaryRelation::is_identity() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b) != (a == b)) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (contains(a, b) != contains(b, a)) return false;
  return true;
}

BinaryRelation BinaryRelation::reflexive_transitive_closure() const {
  BinaryRelation out = *this;
  for (Index a = 0; a < n_; ++a) out.insert(a, a);
  for (Index c = 0; c < n_; ++c)
    for (Index a = 0; a < n_; ++a) {
      if (!out.contains(a, c)) continue;
      for (Index b = 0; b < n_; ++b)
        if (out.contains(c, b)) out.insert(a, b);
    }
  return out;
}

std::string dump_relation(const BinaryRelation& rel) {
  std::ostringstream os;
  for (auto [a, b] : rel.pairs()) os << a << ' ' << b << '\n';
  return os.str();
}

Transformation::Transformation(int degree, std::vector<int> images_in)
    : degree(degree), images(std::move(images_in)) {
  if (degree < 0 || static_cast<int>(images.size()) != degree)
    fail(ErrorCode::invalid_argument, "transformation image list does not match degree");
  for (int v : images)
    if (v < 1 || v > degree)
      fail(ErrorCode::index_out_of_range,
           "transformation image " + std::to_string(v) + " outside [1, " +
               std::to_string(degree) + "]");
}

bool Transformation::is_idempotent() const {
  for (int i = 1; i <= degree; ++i)
    if (apply(apply(i)) != apply(i)) return false;
  return true;
}

std::string Transformation::label() const {
  std::string out = "[";
  for (int i = 0; i < degree; ++i) {
    if (i) out += ',';
    out += std::to_string(images[i]);
  }
  out += ']';
  return out;
}

Transformation identity_transformation(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return Transformation(degree, std::move(images));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree != g.degree)
    fail(ErrorCode::mixed_degrees, "cannot compose transformations of degrees " +
                                       std::to_string(f.degree) + " and " +
                                       std::to_string(g.degree));
  std::vector<int> images(f.degree);
  for (int i = 1; i <= f.degree; ++i) images[i - 1] = f.apply(g.apply(i));
  return Transformation(f.degree, std::move(images));
}

std::vector<int> kernel_partition(const Transformation& f) {
  std::vector<int> classes(f.degree, -1);
  std::map<int, int> class_of_value;
  for (int i = 1; i <= f.degree; ++i) {
    auto [it, inserted] = class_of_value.try_emplace(f.apply(i), static_cast<int>(class_of_value.size()));
    classes[i - 1] = it->second;
  }
  return classes;
}

std::vector<int> image_values(const Transformation& f) {
  std::vector<int> values(f.images);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::string FiniteSemigroup::describe(Index a) const {
  if (has_labels()) return labels_[a];
  return std::to_string(a);
}

FiniteSemigroup from_cayley_table(const std::vector<std::vector<Index>>& table,
                                  std::vector<std::string> labels) {
  FiniteSemigroup s;
  s.size_ = static_cast<int>(table.size());
  if (s.size_ == 0) fail(ErrorCode::invalid_argument, "empty Cayley table");
  s.table_.reserve(static_cast<size_t>(s.size_) * s.size_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != s.size_)
      fail(ErrorCode::invalid_argument, "Cayley table is not square");
    for (Index v : row) {
      if (v < 0 || v >= s.size_)
        fail(ErrorCode::index_out_of_range,
             "table entry " + std::to_string(v) + " outside [0, " +
                 std::to_string(s.size_) + ")");
      s.table_.push_back(v);
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != s.size_)
    fail(ErrorCode::invalid_argument, "label count does not match size");
  s.labels_ = std::move(labels);
  if (auto bad = find_non_associative_triple(s)) {
    auto [a, b, c] = *bad;
    fail(ErrorCode::non_associative,
         "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
             " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
             std::to_string(c) + ")");
  }
  return s;
}

std::optional<std::array<Index, 3>> find_non_associative_triple(const FiniteSemigroup& s) {
  const int n = s.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (s.product(s.product(a, b), c) != s.product(a, s.product(b, c)))
          return std::array<Index, 3>{a, b, c};
  return std::nullopt;
}

FiniteSemigroup from_transformations(const std::vector<Transformation>& generators) {
  if (generators.empty())
    fail(ErrorCode::invalid_argument, "generator list is empty");
  const int degree = generators.front().degree;
  for (const auto& g : generators)
    if (g.degree != degree)
      fail(ErrorCode::mixed_degrees, "generators have mixed degrees");

  std::vector<Transformation> elements;
  std::map<std::vector<int>, Index> index_of;
  auto intern = [&](const Transformation& t) -> Index {
    auto it = index_of.find(t.images);
    if (it != index_of.end()) return it->second;
    Index idx = static_cast<Index>(elements.size());
    index_of.emplace(t.images, idx);
    elements.push_back(t);
    return idx;
  };
  for (const auto& g : generators) intern(g);

  // Worklist closure under right multiplication by generators; discovery
  // order fixes element indices.
  for (size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) intern(compose(elements[i], g));

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (Index a = 0; a < n; ++a) {
    labels[a] = elements[a].label();
    for (Index b = 0; b < n; ++b) {
      auto it = index_of.find(compose(elements[a], elements[b]).images);
      if (it == index_of.end())
        fail(ErrorCode::internal_mismatch, "closure is not closed under composition");
      table[a][b] = it->second;
    }
  }
  return from_cayley_table(table, std::move(labels));
}

IndexSet idempotents(const FiniteSemigroup& s) {
  IndexSet out;
  for (Index a = 0; a < s.size(); ++a)
    if (s.product(a, a) == a) out.push_back(a);
  return out;
}

bool is_idempotent(const FiniteSemigroup& s, Index a) { return s.product(a, a) == a; }

bool natural_leq(const FiniteSemigroup& s, Index e, Index f) {
  if (!is_idempotent(s, e))
    fail(ErrorCode::not_idempotent, "element " + std::to_string(e) + " is not idempotent");
  if (!is_idempotent(s, f))
    fail(ErrorCode::not_idempotent, "element " + std::to_string(f) + " is not idempotent");
  return s.product(e, f) == e && s.product(f, e) == e;
}

BinaryRelation green_preorder(const FiniteSemigroup& s, GreenSide side) {
  const int n = s.size();
  BinaryRelation rel(n);
  for (Index b = 0; b < n; ++b) {
    std::vector<bool> below(n, false);
    below[b] = true;  // b itself, from the adjoined unit
    switch (side) {
      case GreenSide::R:
        for (Index x = 0; x < n; ++x) below[s.product(b, x)] = true;
        break;
      case GreenSide::L:
        for (Index x = 0; x < n; ++x) below[s.product(x, b)] = true;
        break;
      case GreenSide::J:
        for (Index x = 0; x < n; ++x) {
          below[s.product(b, x)] = true;
          below[s.product(x, b)] = true;
          const Index xb = s.product(x, b);
          for (Index y = 0; y < n; ++y) below[s.product(xb, y)] = true;
        }
        break;
    }
    for (Index a = 0; a < n; ++a)
      if (below[a]) rel.insert(a, b);
  }
  return rel;
}

BinaryRelation green_equiv(const FiniteSemigroup& s, GreenSide side) {
  BinaryRelation pre = green_preorder(s, side);
  return pre.intersect(pre.transpose());
}

bool is_J_trivial(const FiniteSemigroup& s) { return green_equiv(s, GreenSide::J).is_identity(); }

bool is_R_trivial(const FiniteSemigroup& s) { return green_equiv(s, GreenSide::R).is_identity(); }

bool is_commutative(const FiniteSemigroup& s) {
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = a + 1; b < s.size(); ++b)
      if (s.product(a, b) != s.product(b, a)) return false;
  return true;
}

}  // namespace efountain
