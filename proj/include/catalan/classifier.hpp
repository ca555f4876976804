#pragma once

#include <vector>

#include "catalan/dyck.hpp"
#include "catalan/fin_monoidal.hpp"
#include "catalan/sset.hpp"

namespace catalan {

/// The named low-dimensional simplices of the Catalan simplicial set.
///
/// a, l, r, k are the four non-degenerate 3-simplices, identified by their
/// facet tuples a = (t,t,t,t), l = (i,s1c,t,s1c), r = (s0c,t,s0c,i),
/// k = (i,s1c,s0c,i).
struct CatalanSimplices {
  DyckWord star, e, c;
  DyckWord s0e, s0c, s1c, t, i;
  DyckWord a, l, r, k;
};

/// Looks a, l, r, k up among the 3-simplices by their faces; throws
/// StructuralError if any tuple is not realised exactly once.
CatalanSimplices catalan_simplices();

/// A simplicial map C -> N(m) together with the monoid it corresponds to.
/// In the strict case eta = eta_prime, since rho is an identity and I⊗I = I.
struct ClassificationRecord {
  SimplicialMap map;
  MonoidObject monoid;
  int eta_prime = 0;
};

/// Truncation used for the Catalan side and the nerve when building maps.
inline constexpr int kClassificationDimension = 4;

/// Candidate data (A, mu, eta') = images of (c, t, i), kept when the images of
/// the four non-degenerate 3-simplices are 3-simplices of the nerve. Ordered by
/// object, then mu, then eta'.
std::vector<ClassificationRecord> classify_maps(const FinMonoidalStructure& m);

struct ClassificationSummary {
  std::size_t records = 0;
  std::size_t engine_maps = 0;
  std::size_t monoids = 0;
  bool agree = false;
};

/// classify_maps, the generic engine enumeration C -> N(m) and
/// enumerate_monoids, compared as sets of (A, mu, eta).
ClassificationSummary compare_classification(const FinMonoidalStructure& m);
bool verify_classification(const FinMonoidalStructure& m);

/// Whether the image of k is a 3-simplex for every candidate (A, mu, eta'),
/// monoid or not.
bool check_fk_automatic(const FinMonoidalStructure& m);

}  // namespace catalan
