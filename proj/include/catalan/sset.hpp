#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace catalan {

/// Raw tables of a simplicial set truncated at dimension `top`.
///
/// faces[n][i][x] (n >= 1, 0 <= i <= n) is the index of d_i x in level n-1;
/// degeneracies[n][i][x] (n < top, 0 <= i <= n) is the index of s_i x in level n+1.
/// faces[0] and degeneracies[top] are empty.
struct SSetTables {
  int top = 0;
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degeneracies;

  friend bool operator==(const SSetTables&, const SSetTables&) = default;
};

/// A finite simplicial set truncated at a cut-off dimension. Immutable.
///
/// Construction checks table shapes and index ranges (StructuralError) and that
/// labels are unique within a level; it does not check the simplicial identities
/// (see check_simplicial_identities).
class TruncatedSSet {
 public:
  explicit TruncatedSSet(SSetTables tables);

  int top() const noexcept { return t_.top; }
  std::size_t size(int n) const { return t_.levels.at(n).size(); }
  const std::vector<std::string>& level(int n) const { return t_.levels.at(n); }
  const std::string& label(int n, int x) const { return t_.levels.at(n).at(x); }
  int face(int n, int i, int x) const { return t_.faces[n][i][x]; }
  int degeneracy(int n, int i, int x) const { return t_.degeneracies[n][i][x]; }
  std::optional<int> find(int n, const std::string& label) const;

  /// (d_0 x, ..., d_n x) for x in level n >= 1.
  std::vector<int> facet_tuple(int n, int x) const;

  /// Whether x is in the image of some degeneracy; all (i, y) with s_i y = x.
  bool is_degenerate(int n, int x) const { return !degenerate_reps_[n][x].empty(); }
  const std::vector<std::pair<int, int>>& degenerate_reps(int n, int x) const {
    return degenerate_reps_[n][x];
  }

  /// Simplices of level n whose facet tuple is `facets` (n >= 1).
  const std::vector<int>& fillers_of(int n, const std::vector<int>& facets) const;

  TruncatedSSet truncate(int new_top) const;
  const SSetTables& tables() const noexcept { return t_; }

  friend bool operator==(const TruncatedSSet& a, const TruncatedSSet& b) { return a.t_ == b.t_; }

 private:
  SSetTables t_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> degenerate_reps_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_facets_;
};

/// Levels are enumerate_dyck(n) for n <= top; labels are the Dyck words.
TruncatedSSet catalan_sset(int top);

/// The simplicial set with one simplex in each dimension.
TruncatedSSet point_sset(int top);

struct IdentityViolation {
  std::string identity;  // "d_i d_j", "s_i s_j", "d_i s_j"
  int dimension = 0;     // dimension of the simplex the identity is applied to
  int i = 0;
  int j = 0;
  std::string simplex;
};

/// Every violated instance of the simplicial identities within the truncation.
std::vector<IdentityViolation> check_simplicial_identities(const TruncatedSSet& s);

/// Facet indices (x_0, ..., x_n) with d_j x_i = d_i x_{j+1} for 0 <= i <= j < n.
using Boundary = std::vector<int>;

/// All n-boundaries, sorted. Found by labelling every proper face of the
/// standard n-simplex skeleton by skeleton (vertices, edges, triangles, ...)
/// so that compatibility is pruned at the lowest dimension where it can fail.
std::vector<Boundary> boundaries(const TruncatedSSet& s, int n,
                                 std::size_t budget = std::size_t{10'000'000});

/// All n-boundaries by filtering the (n+1)-fold product of level n-1. Intended
/// as an independent cross-check for small n.
std::vector<Boundary> boundaries_naive(const TruncatedSSet& s, int n);

/// All n-simplices with the given facets.
std::vector<int> fillers(const TruncatedSSet& s, const Boundary& b);

/// Every n-boundary with r < n <= maxdim has exactly one filler.
bool is_r_coskeletal_up_to(const TruncatedSSet& s, int r, int maxdim);

/// Extend the r-truncation `s` (r = s.top()) to dimension `top` by declaring
/// every boundary fillable exactly once. New simplices are labelled
/// "<f0,f1,...>" by facet indices. Throws BudgetError past `budget` simplices.
TruncatedSSet coskeletal_extension(const TruncatedSSet& s, int top,
                                   std::size_t budget = std::size_t{1'000'000});

/// Per-level components of a simplicial map, components[n][x] in target level n.
struct SimplicialMap {
  std::vector<std::vector<int>> components;

  friend auto operator<=>(const SimplicialMap&, const SimplicialMap&) = default;
};

/// Commutes with every face and degeneracy within the common truncation.
bool is_simplicial_map(const TruncatedSSet& source, const TruncatedSSet& target,
                       const SimplicialMap& f);

struct MapSearchOptions {
  bool injective = false;
  /// Prescribed images: (level, simplex) -> target simplex.
  std::map<std::pair<int, int>, int> fixed;
  std::size_t budget = std::size_t{1'000'000};
};

/// Backtracking over non-degenerate simplices in increasing dimension.
/// Degenerate simplices are forced by their degeneracy representations; a
/// non-degenerate n-simplex may only go to a filler of its image boundary.
/// Maps are defined up to min(source.top(), target.top()).
std::vector<SimplicialMap> enumerate_maps(const TruncatedSSet& source,
                                          const TruncatedSSet& target,
                                          const MapSearchOptions& options = {});

/// All levelwise-bijective simplicial maps.
std::vector<SimplicialMap> isomorphisms(const TruncatedSSet& source, const TruncatedSSet& target);

/// All simplicial maps into a target that is k-coskeletal within its truncation.
/// Throws PreconditionError when the target is not k-coskeletal there or the
/// source stops below dimension k+1.
std::vector<SimplicialMap> simplicial_maps(const TruncatedSSet& source,
                                           const TruncatedSSet& target, int k);

}  // namespace catalan
