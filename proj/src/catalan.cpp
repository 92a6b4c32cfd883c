#include "efountain/catalan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "efountain/algebra.hpp"
#include "efountain/category.hpp"
#include "efountain/orders.hpp"

namespace efountain {

namespace {

std::vector<int> mask_points(SubsetMask mask) {
  std::vector<int> points;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) points.push_back(i + 1);
  return points;
}

bool is_order_preserving_increasing(const Transformation& f) {
  for (int i = 1; i <= f.degree; ++i) {
    if (f.apply(i) < i) return false;
    if (i > 1 && f.apply(i - 1) > f.apply(i)) return false;
  }
  return true;
}

}  // namespace

std::string subset_text(SubsetMask mask) {
  std::string out = "{";
  bool first = true;
  for (int p : mask_points(mask)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(p);
  }
  out += '}';
  return out;
}

std::uint64_t catalan_number(int n) {
  std::vector<std::uint64_t> cat(static_cast<size_t>(n) + 1, 0);
  cat[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) cat[k] += cat[i] * cat[k - 1 - i];
  return cat[n];
}

CatalanMonoid generate_catalan(int degree) {
  if (degree < 1 || degree > 8)
    fail(ErrorCode::degree_too_large, "Catalan degree must be in [1, 8]");

  CatalanMonoid m;
  m.degree = degree;
  std::vector<int> images(degree);
  // Enumerate image tuples with f(i) >= max(i, f(i-1)), lexicographically.
  auto enumerate = [&](auto&& self, int i) -> void {
    if (i == degree) {
      m.elements.emplace_back(degree, images);
      return;
    }
    const int lo = std::max(i + 1, i == 0 ? 1 : images[i - 1]);
    for (int v = lo; v <= degree; ++v) {
      images[i] = v;
      self(self, i + 1);
    }
  };
  enumerate(enumerate, 0);

  std::map<std::vector<int>, Index> index_of;
  for (Index i = 0; i < static_cast<Index>(m.elements.size()); ++i)
    index_of.emplace(m.elements[i].images, i);

  const int n = static_cast<int>(m.elements.size());
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (Index a = 0; a < n; ++a) {
    labels[a] = m.elements[a].label();
    for (Index b = 0; b < n; ++b)
      table[a][b] = index_of.at(compose(m.elements[a], m.elements[b]).images);
  }
  m.semigroup = from_cayley_table(table, std::move(labels));

  m.pairs.reserve(n);
  for (const auto& f : m.elements) m.pairs.push_back(catalan_pair_from_f(f));

  m.idempotent_of_mask.assign(1u << (degree - 1), -1);
  for (SubsetMask z = 0; z < (1u << (degree - 1)); ++z) {
    const Transformation e = catalan_e_z(z, degree);
    if (!e.is_idempotent())
      fail(ErrorCode::internal_mismatch, "e_Z is not idempotent");
    m.idempotent_of_mask[z] = index_of.at(e.images);
  }
  return m;
}

Transformation catalan_e_z(SubsetMask z, int degree) {
  if (degree >= 32 || (z >> (degree - 1)) != 0)
    fail(ErrorCode::index_out_of_range, "subset does not fit in [degree-1]");
  std::vector<int> images(degree);
  for (int i = 1; i <= degree; ++i) {
    int value = degree;
    for (int p = i; p < degree; ++p)
      if (z & (1u << (p - 1))) {
        value = p;
        break;
      }
    images[i - 1] = value;
  }
  return Transformation(degree, std::move(images));
}

Transformation catalan_f_from_pair(SubsetMask x, SubsetMask y, int degree) {
  if ((x >> (degree - 1)) != 0 || (y >> (degree - 1)) != 0)
    fail(ErrorCode::index_out_of_range, "subset does not fit in [degree-1]");
  if (!subset_preceq(x, y))
    fail(ErrorCode::not_comparable,
         subset_text(x) + " is not elementwise below " + subset_text(y));
  const std::vector<int> xs = mask_points(x), ys = mask_points(y);
  std::vector<int> images(degree, degree);
  int j = 0;
  for (int i = 1; i <= degree; ++i) {
    while (j < static_cast<int>(xs.size()) && xs[j] < i) ++j;
    images[i - 1] = j < static_cast<int>(xs.size()) ? ys[j] : degree;
  }
  return Transformation(degree, std::move(images));
}

std::pair<SubsetMask, SubsetMask> catalan_pair_from_f(const Transformation& f) {
  if (!is_order_preserving_increasing(f))
    fail(ErrorCode::invalid_argument,
         "transformation is not order-preserving and order-increasing");
  SubsetMask x = 0, y = 0;
  for (int v = 1; v < f.degree; ++v) {
    int max_preimage = 0;
    for (int i = 1; i <= f.degree; ++i)
      if (f.apply(i) == v) max_preimage = i;
    if (max_preimage > 0) {
      y |= 1u << (v - 1);
      x |= 1u << (max_preimage - 1);
    }
  }
  return {x, y};
}

bool is_pcs(const Transformation& f, SubsetMask z) {
  const std::vector<int> points = mask_points(z);
  std::vector<int> values;
  for (int p : points) {
    const int v = f.apply(p);
    if (v == f.degree) return false;  // d is the overflow point
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool is_mcs(const Transformation& g, SubsetMask z) {
  const Transformation e = catalan_e_z(z, g.degree);
  for (int p : mask_points(z)) {
    bool hit = false;
    for (int i = 1; i <= g.degree; ++i)
      if (e.apply(g.apply(i)) == p) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool subset_preceq(SubsetMask x, SubsetMask y) {
  if (std::popcount(x) != std::popcount(y)) return false;
  const std::vector<int> xs = mask_points(x), ys = mask_points(y);
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] > ys[i]) return false;
  return true;
}

SubsetPoset build_preceq(int n) {
  if (n < 0 || n > 12) fail(ErrorCode::degree_too_large, "preceq ground set must be in [0, 12]");
  SubsetPoset poset;
  poset.n = n;
  poset.relation = BinaryRelation(1 << n);
  for (SubsetMask x = 0; x < (1u << n); ++x)
    for (SubsetMask y = 0; y < (1u << n); ++y)
      if (subset_preceq(x, y)) poset.relation.insert(static_cast<Index>(x), static_cast<Index>(y));
  if (poset.relation.pair_count() != catalan_number(n + 1))
    fail(ErrorCode::internal_mismatch,
         "comparable pairs of preceq_n do not count the Catalan number");
  return poset;
}

CheckResult star_plus_check(const CatalanMonoid& m, const EFountainStructure& f) {
  for (Index i = 0; i < m.size(); ++i) {
    const auto [x, y] = m.pairs[i];
    if (f.star[i] != m.idempotent_of_mask[x])
      return {false, {i}, "(f_{X,Y})* != e_X"};
    if (f.plus[i] != m.idempotent_of_mask[y])
      return {false, {i}, "(f_{X,Y})+ != e_Y"};
  }
  // L~ is kernel equality and R~ is image equality.
  for (Index i = 0; i < m.size(); ++i)
    for (Index j = 0; j < m.size(); ++j) {
      const bool same_star = f.star[i] == f.star[j];
      const bool same_kernel = kernel_partition(m.elements[i]) == kernel_partition(m.elements[j]);
      if (same_star != same_kernel) return {false, {i, j}, "L~ differs from kernel equality"};
      const bool same_plus = f.plus[i] == f.plus[j];
      const bool same_image = image_values(m.elements[i]) == image_values(m.elements[j]);
      if (same_plus != same_image) return {false, {i, j}, "R~ differs from image equality"};
    }
  return {true, {}, ""};
}

bool CatalanVerification::ok() const {
  for (const auto& stage : stages)
    if (!stage.ok) return false;
  return true;
}

CatalanVerification verify_catalan_isomorphism(int degree, const RingSpec& ring) {
  if (degree < 1 || degree > 7)
    fail(ErrorCode::degree_too_large, "isomorphism pipeline supports degrees 1 to 7");

  CatalanVerification v;
  v.degree = degree;
  auto stage = [&](const std::string& name, bool ok, std::string detail = "") {
    v.stages.push_back({name, ok, std::move(detail)});
    return ok;
  };

  const CatalanMonoid m = generate_catalan(degree);
  stage("generate", true, "size=" + std::to_string(m.size()));

  // (X, Y) pairs are exactly the comparable pairs of preceq_{d-1}.
  {
    bool ok = m.size() == static_cast<int>(catalan_number(degree));
    std::map<std::pair<SubsetMask, SubsetMask>, int> seen;
    for (Index i = 0; ok && i < m.size(); ++i) {
      const auto [x, y] = m.pairs[i];
      ok = subset_preceq(x, y) && seen.emplace(std::pair{x, y}, i).second &&
           catalan_f_from_pair(x, y, degree) == m.elements[i];
    }
    if (!stage("pairCorrespondence", ok)) return v;
  }

  const FountainAnalysis analysis = analyze_reduced_e_fountain(m.semigroup, idempotents(m.semigroup));
  if (!stage("reducedEFountain", analysis.ok(),
             analysis.ok() ? "" : analysis.diagnostic->detail))
    return v;
  const EFountainStructure& f = *analysis.structure;

  if (!stage("jTrivial", is_J_trivial(m.semigroup))) return v;
  if (!stage("congruence", check_congruence_condition(f).holds)) return v;

  const CheckResult star_plus = star_plus_check(m, f);
  if (!stage("starPlus", star_plus.holds, star_plus.witness_kind)) return v;

  // PCS/MCS characterizations of (f e_Z)* = e_Z and (e_Z g)+ = e_Z.
  {
    bool pcs_ok = true, mcs_ok = true;
    for (Index i = 0; i < m.size() && (pcs_ok && mcs_ok); ++i)
      for (SubsetMask z = 0; z < (1u << (degree - 1)); ++z) {
        const Index ez = m.idempotent_of_mask[z];
        if (is_pcs(m.elements[i], z) != (f.star[m.semigroup.product(i, ez)] == ez)) {
          pcs_ok = false;
          break;
        }
        if (is_mcs(m.elements[i], z) != (f.plus[m.semigroup.product(ez, i)] == ez)) {
          mcs_ok = false;
          break;
        }
      }
    if (!stage("pcsCharacterization", pcs_ok)) return v;
    if (!stage("mcsCharacterization", mcs_ok)) return v;
  }

  const CheckResult right_ample = check_right_ample(f);
  if (degree >= 3) {
    std::string detail;
    if (!right_ample.holds) {
      std::ostringstream os;
      os << "witness (a=" << m.semigroup.describe(right_ample.witness[0])
         << ", e=" << m.semigroup.describe(right_ample.witness[1]) << ")";
      detail = os.str();
    }
    if (!stage("rightAmpleFails", !right_ample.holds, detail)) return v;
  } else {
    if (!stage("rightAmpleHolds", right_ample.holds)) return v;
  }
  if (!stage("generalizedRightAmple", check_generalized_right_ample(f).holds)) return v;
  if (!stage("generalizedLeftAmple", check_generalized_left_ample(f).holds)) return v;

  const FiniteCategory category = build_category(f);
  stage("category", true,
        "objects=" + std::to_string(category.objects().size()) +
            " morphisms=" + std::to_string(category.morphism_count()));

  // The associated category is the poset preceq_{d-1}: between e_Z and e_W
  // there is exactly one morphism when Z preceq W, none otherwise.
  {
    bool ok = true;
    const SubsetMask top = 1u << (degree - 1);
    for (SubsetMask z = 0; z < top && ok; ++z)
      for (SubsetMask w = 0; w < top; ++w) {
        int hom = 0;
        for (Index i = 0; i < m.size(); ++i)
          if (f.star[i] == m.idempotent_of_mask[z] && f.plus[i] == m.idempotent_of_mask[w]) ++hom;
        if (hom != (subset_preceq(z, w) ? 1 : 0)) {
          ok = false;
          break;
        }
      }
    if (!stage("categoryIsPoset", ok)) return v;
  }

  const IsomorphismResult iso = with_ring(ring, [&](auto r) {
    return verify_isomorphism(f, category, r);
  });
  stage("isomorphism", iso.holds && iso.detail == "order=leqR",
        iso.holds ? "ring=" + ring.name() + " " + iso.detail : iso.detail);
  return v;
}

}  // namespace efountain
