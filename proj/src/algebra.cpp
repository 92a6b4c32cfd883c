#include "efountain/algebra.hpp"

namespace efountain {

std::vector<IndexSet> tri_below_table(const EFountainStructure& f) {
  std::vector<IndexSet> below(f.size());
  for (Index a = 0; a < f.size(); ++a) below[a] = tri_below(f, a);
  return below;
}

std::optional<std::pair<Index, Index>> phi_basis_collision(const EFountainStructure& f) {
  const std::vector<IndexSet> below = tri_below_table(f);
  for (Index a = 0; a < f.size(); ++a)
    for (Index b = a + 1; b < f.size(); ++b)
      if (below[a] == below[b]) return std::pair{a, b};
  return std::nullopt;
}

void require_partial_order(const BinaryRelation& order) {
  if (!diagnose(order).is_partial_order)
    fail(ErrorCode::invalid_argument, "relation is not a partial order");
}

std::vector<Index> topological_order(const BinaryRelation& order) {
  const int n = order.domain_size();
  std::vector<int> unplaced_predecessors(n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && order.contains(a, b)) ++unplaced_predecessors[b];
  std::vector<Index> topo;
  std::vector<bool> placed(n, false);
  topo.reserve(n);
  for (int step = 0; step < n; ++step) {
    Index next = -1;
    for (Index a = 0; a < n; ++a)
      if (!placed[a] && unplaced_predecessors[a] == 0) {
        next = a;
        break;
      }
    if (next == -1)
      fail(ErrorCode::internal_mismatch, "partial order has no linear extension");
    placed[next] = true;
    topo.push_back(next);
    for (Index b = 0; b < n; ++b)
      if (next != b && order.contains(next, b)) --unplaced_predecessors[b];
  }
  return topo;
}

}  // namespace efountain
