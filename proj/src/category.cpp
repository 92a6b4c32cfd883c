#include "efountain/category.hpp"

#include <sstream>

namespace efountain {

FiniteCategory build_category(const EFountainStructure& f) {
  if (!check_congruence_condition(f).holds)
    fail(ErrorCode::congruence_required,
         "the associated category requires the congruence condition");
  const FiniteSemigroup& s = f.semigroup;
  const int n = s.size();

  FiniteCategory c;
  c.objects_ = f.e_set;
  c.morphisms_ = n;
  c.dom_ = f.star;
  c.cod_ = f.plus;
  c.comp_.assign(static_cast<size_t>(n) * n, FiniteCategory::undefined);
  for (Index after = 0; after < n; ++after)
    for (Index first = 0; first < n; ++first)
      if (f.star[after] == f.plus[first])
        c.comp_[static_cast<size_t>(after) * n + first] = s.product(after, first);

  // Domain/codomain closure: (ba)* = a* and (ba)+ = b+ whenever defined.
  for (Index b = 0; b < n; ++b)
    for (Index a = 0; a < n; ++a) {
      if (!c.defined(b, a)) continue;
      const Index ba = c.compose(b, a);
      if (f.star[ba] != f.star[a] || f.plus[ba] != f.plus[b])
        fail(ErrorCode::axiom_failure,
             "composition of " + s.describe(b) + " and " + s.describe(a) +
                 " does not preserve domain/codomain");
    }

  // C(e) is the identity at the object e.
  for (Index e : f.e_set) {
    if (f.star[e] != e || f.plus[e] != e)
      fail(ErrorCode::axiom_failure, "C(" + s.describe(e) + ") is not an endomorphism of its object");
    for (Index a = 0; a < n; ++a) {
      if (f.plus[a] == e && c.compose(e, a) != a)
        fail(ErrorCode::axiom_failure, "C(" + s.describe(e) + ") is not a left identity");
      if (f.star[a] == e && c.compose(a, e) != a)
        fail(ErrorCode::axiom_failure, "C(" + s.describe(e) + ") is not a right identity");
    }
  }

  // Associativity over all composable triples.
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!c.defined(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (!c.defined(y, z)) continue;
        if (!c.defined(c.compose(x, y), z) || !c.defined(x, c.compose(y, z)) ||
            c.compose(c.compose(x, y), z) != c.compose(x, c.compose(y, z)))
          fail(ErrorCode::axiom_failure, "composition is not associative");
      }
    }

  return c;
}

std::string dump_category(const FiniteCategory& c) {
  std::ostringstream os;
  os << "objects:";
  for (Index e : c.objects()) os << ' ' << e;
  os << '\n';
  for (Index m = 0; m < c.morphism_count(); ++m)
    os << m << ": " << c.dom(m) << " -> " << c.cod(m) << '\n';
  return os.str();
}

}  // namespace efountain
