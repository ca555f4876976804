#include "catalan/relation.hpp"

#include <algorithm>
#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

std::vector<std::vector<bool>> to_matrix(const std::vector<VertexPair>& pairs, int n) {
  std::vector<std::vector<bool>> m(n + 1, std::vector<bool>(n + 1, false));
  for (auto [i, j] : pairs) m[i][j] = true;
  return m;
}

}  // namespace

EdgeRelation::EdgeRelation(int dim, std::vector<VertexPair> ps) : n(dim), pairs(std::move(ps)) {
  if (n < 0) throw PreconditionError("relation dimension must be non-negative");
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i > n || j > n) {
      throw IndexError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside {0.." + std::to_string(n) + "}");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool EdgeRelation::contains(int i, int j) const {
  return std::binary_search(pairs.begin(), pairs.end(), VertexPair{i, j});
}

std::string EdgeRelation::to_string() const {
  if (pairs.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) os << ' ';
    os << pairs[k].first << '-' << pairs[k].second;
  }
  return os.str();
}

bool is_k_relation(const std::vector<VertexPair>& pairs, int n) {
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i > n || j > n) return false;
    if (!(i < j)) return false;
  }
  const auto m = to_matrix(pairs, n);
  for (int i = 0; i <= n; ++i) {
    for (int k = i + 2; k <= n; ++k) {
      if (!m[i][k]) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!m[i][j] || !m[j][k]) return false;
      }
    }
  }
  return true;
}

EdgeRelation make_k_relation(int n, std::vector<VertexPair> pairs) {
  if (!is_k_relation(pairs, n)) {
    throw KConditionError(EdgeRelation(n, pairs).to_string() + " violates the K_" +
                          std::to_string(n) + " conditions");
  }
  return EdgeRelation(n, std::move(pairs));
}

EdgeRelation to_relation(const DyckWord& word) {
  const auto ups = word.up_positions();
  const auto downs = word.down_positions();
  const int n = word.dimension();
  std::vector<VertexPair> pairs;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (ups[j] < downs[i]) pairs.emplace_back(i, j);
    }
  }
  return EdgeRelation(n, std::move(pairs));
}

DyckWord from_relation(const EdgeRelation& rel) {
  if (!is_k_relation(rel.pairs, rel.n)) {
    throw KConditionError(rel.to_string() + " violates the K_" + std::to_string(rel.n) +
                          " conditions");
  }
  // r(i): the last U that precedes the (i+1)-st D, counted from 0.
  std::vector<int> reach(rel.n + 1);
  for (int i = 0; i <= rel.n; ++i) reach[i] = i;
  for (auto [i, j] : rel.pairs) reach[i] = std::max(reach[i], j);
  std::string letters;
  for (int m = 0; m <= rel.n; ++m) {
    letters.push_back('U');
    for (int i = 0; i <= rel.n; ++i) {
      if (reach[i] == m) letters.push_back('D');
    }
  }
  return DyckWord(letters);
}

EdgeRelation relation_face(const EdgeRelation& rel, int k) {
  if (rel.n == 0) throw NoFaceError("a relation on one vertex has no faces");
  if (k < 0 || k > rel.n) throw IndexError("face index " + std::to_string(k) + " out of range");
  std::vector<VertexPair> pairs;
  for (auto [i, j] : rel.pairs) {
    if (i == k || j == k) continue;
    pairs.emplace_back(i > k ? i - 1 : i, j > k ? j - 1 : j);
  }
  return EdgeRelation(rel.n - 1, std::move(pairs));
}

EdgeRelation relation_degeneracy(const EdgeRelation& rel, int k) {
  if (k < 0 || k > rel.n) {
    throw IndexError("degeneracy index " + std::to_string(k) + " out of range");
  }
  const auto sigma = [k](int x) { return x <= k ? x : x - 1; };
  std::vector<VertexPair> pairs;
  for (int x = 0; x <= rel.n + 1; ++x) {
    for (int y = x + 1; y <= rel.n + 1; ++y) {
      if (sigma(x) == sigma(y) || rel.contains(sigma(x), sigma(y))) pairs.emplace_back(x, y);
    }
  }
  return EdgeRelation(rel.n + 1, std::move(pairs));
}

std::vector<EdgeRelation> enumerate_k_relations(int n) {
  if (n < 0) throw PreconditionError("dimension must be non-negative");
  // Decide pairs by increasing span: (i, k) may only be added once every
  // (i, j) and (j, k) with i < j < k is present, so every partial choice
  // already satisfies condition (ii).
  std::vector<VertexPair> slots;
  for (int span = 1; span <= n; ++span) {
    for (int i = 0; i + span <= n; ++i) slots.emplace_back(i, i + span);
  }
  std::vector<std::vector<bool>> in(n + 1, std::vector<bool>(n + 1, false));
  std::vector<EdgeRelation> out;
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == slots.size()) {
      std::vector<VertexPair> pairs;
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (in[i][j]) pairs.emplace_back(i, j);
        }
      }
      out.emplace_back(n, std::move(pairs));
      return;
    }
    self(self, s + 1);
    const auto [i, k] = slots[s];
    for (int j = i + 1; j < k; ++j) {
      if (!in[i][j] || !in[j][k]) return;
    }
    in[i][k] = true;
    self(self, s + 1);
    in[i][k] = false;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeRelation filler(const BoundaryTuple& boundary) {
  const int n = boundary.n;
  if (n <= 2) throw PreconditionError("relation fillers are only guaranteed above dimension 2");
  if (static_cast<int>(boundary.facets.size()) != n + 1) {
    throw PreconditionError("an n-boundary has n+1 facets");
  }
  for (const auto& f : boundary.facets) {
    if (f.n != n - 1) throw PreconditionError("facet has the wrong dimension");
    if (!is_k_relation(f.pairs, f.n)) {
      throw KConditionError("facet " + f.to_string() + " violates the K conditions");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (relation_face(boundary.facets[i], j) != relation_face(boundary.facets[j + 1], i)) {
        throw BoundaryCompatibilityError("d_" + std::to_string(j) + "(x_" + std::to_string(i) +
                                         ") != d_" + std::to_string(i) + "(x_" +
                                         std::to_string(j + 1) + ")");
      }
    }
  }
  std::vector<VertexPair> pairs;
  for (int k = 0; k <= n; ++k) {
    for (auto [i, j] : boundary.facets[k].pairs) {
      pairs.emplace_back(i >= k ? i + 1 : i, j >= k ? j + 1 : j);
    }
  }
  return make_k_relation(n, std::move(pairs));
}

}  // namespace catalan
