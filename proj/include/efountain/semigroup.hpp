#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efountain/error.hpp"

namespace efountain {

using Index = int;
using IndexSet = std::vector<Index>;  // sorted, no duplicates

/// Binary relation on {0, ..., n-1}, stored densely.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(int domain_size)
      : n_(domain_size), bits_(static_cast<size_t>(domain_size) * domain_size) {}

  int domain_size() const { return n_; }

  bool contains(Index a, Index b) const {
    return bits_[static_cast<size_t>(a) * n_ + b];
  }

  void insert(Index a, Index b) { bits_[static_cast<size_t>(a) * n_ + b] = true; }

  size_t pair_count() const;

  /// All pairs (a, b) in lexicographic order.
  std::vector<std::pair<Index, Index>> pairs() const;

  BinaryRelation transpose() const;
  BinaryRelation intersect(const BinaryRelation& other) const;
  bool subset_of(const BinaryRelation& other) const;
  bool is_identity() const;
  bool is_symmetric() const;

  /// Smallest reflexive and transitive relation containing this one.
  BinaryRelation reflexive_transitive_closure() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  int n_ = 0;
  std::vector<bool> bits_;
};

/// One pair per line, "a b", sorted lexicographically.
std::string dump_relation(const BinaryRelation& rel);

/// Total function on [n] = {1, ..., n}; images are 1-based.
struct Transformation {
  int degree = 0;
  std::vector<int> images;

  Transformation() = default;
  Transformation(int degree, std::vector<int> images);

  int apply(int point) const { return images[point - 1]; }
  bool is_idempotent() const;
  std::string label() const;  // e.g. "[2,2,3]"

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;
};

Transformation identity_transformation(int degree);

/// fg = "apply g, then f"; this convention is fixed across the library.
Transformation compose(const Transformation& f, const Transformation& g);

/// Kernel of f as a partition: element i maps to the class id of i+1.
std::vector<int> kernel_partition(const Transformation& f);

/// Sorted image values of f.
std::vector<int> image_values(const Transformation& f);

/// Finite semigroup on {0, ..., size-1} with a dense Cayley table.
/// Associativity is verified at construction and can be re-asserted.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  int size() const { return size_; }

  Index product(Index a, Index b) const {
    return table_[static_cast<size_t>(a) * size_ + b];
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Display name for an element: its label when present, else the index.
  std::string describe(Index a) const;

  friend FiniteSemigroup from_cayley_table(const std::vector<std::vector<Index>>& table,
                                           std::vector<std::string> labels);

 private:
  int size_ = 0;
  std::vector<Index> table_;  // row-major
  std::vector<std::string> labels_;
};

/// Validates shape, entry range and associativity (first failing triple is
/// reported). Throws NonAssociative or IndexOutOfRange.
FiniteSemigroup from_cayley_table(const std::vector<std::vector<Index>>& table,
                                  std::vector<std::string> labels = {});

/// Closure of the generators under composition fg = f(g(.)).
/// Element order is deterministic: generators first, then breadth-first
/// discovery; labels record image tuples.
FiniteSemigroup from_transformations(const std::vector<Transformation>& generators);

/// { a : aa = a }, ascending.
IndexSet idempotents(const FiniteSemigroup& s);

bool is_idempotent(const FiniteSemigroup& s, Index a);

/// Natural partial order on idempotents: e <= f iff ef = fe = e.
/// Throws NotIdempotent if either argument fails aa = a.
bool natural_leq(const FiniteSemigroup& s, Index e, Index f);

enum class GreenSide { R, L, J };

/// a <=_R b iff a is in bS^1, and dually; S^1 is never materialized.
BinaryRelation green_preorder(const FiniteSemigroup& s, GreenSide side);

/// The preorder intersected with its transpose.
BinaryRelation green_equiv(const FiniteSemigroup& s, GreenSide side);

bool is_J_trivial(const FiniteSemigroup& s);
bool is_R_trivial(const FiniteSemigroup& s);

bool is_commutative(const FiniteSemigroup& s);

/// Re-runs the exhaustive associativity check; returns the first failing
/// triple (a, b, c) or nullopt if associative.
std::optional<std::array<Index, 3>> find_non_associative_triple(const FiniteSemigroup& s);

}  // namespace efountain
