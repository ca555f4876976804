#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "catalan/dyck.hpp"

namespace catalan {

using VertexPair = std::pair<int, int>;

/// A binary relation on {0..n}, kept as a sorted, duplicate-free pair list.
///
/// An EdgeRelation does not by itself promise the K_n conditions; use
/// is_k_relation or the checked factory `make_k_relation`.
struct EdgeRelation {
  int n = 0;
  std::vector<VertexPair> pairs;

  EdgeRelation() = default;
  EdgeRelation(int dim, std::vector<VertexPair> ps);

  bool contains(int i, int j) const;
  /// "0-1 0-2" style; "{}" when empty.
  std::string to_string() const;

  friend auto operator<=>(const EdgeRelation&, const EdgeRelation&) = default;
};

/// Compatible facets x_0..x_n of an n-simplex.
struct BoundaryTuple {
  int n = 0;
  std::vector<EdgeRelation> facets;
};

/// Conditions (i) i R j => i < j, and (ii) i < j < k, i R k => i R j and j R k.
bool is_k_relation(const std::vector<VertexPair>& pairs, int n);

/// Throws KConditionError unless the relation satisfies the K_n conditions.
EdgeRelation make_k_relation(int n, std::vector<VertexPair> pairs);

/// {(i, j) : i < j and the (j+1)-st U precedes the (i+1)-st D}.
EdgeRelation to_relation(const DyckWord& word);

/// Inverse of to_relation. Throws KConditionError for invalid relations.
DyckWord from_relation(const EdgeRelation& rel);

/// Restriction to {0..n} \ {k}, renumbered order-preservingly.
EdgeRelation relation_face(const EdgeRelation& rel, int k);

/// Pullback along sigma_k : [n+1] ->> [n]; vertices k and k+1 become related.
EdgeRelation relation_degeneracy(const EdgeRelation& rel, int k);

/// All relations on {0..n} satisfying the K_n conditions, sorted.
std::vector<EdgeRelation> enumerate_k_relations(int n);

/// The unique relation with the given facets (n > 2).
/// Throws BoundaryCompatibilityError when the facets disagree.
EdgeRelation filler(const BoundaryTuple& boundary);

}  // namespace catalan
