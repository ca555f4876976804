#include <algorithm>
#include <set>

#include "catalan/errors.hpp"
#include "catalan/relation.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catalan;

namespace {

bool k_conditions(const std::set<std::pair<int, int>>& r, int n) {
  for (auto [i, j] : r) {
    if (i >= j || j > n) return false;
    for (int m = i + 1; m < j; ++m) {
      if (!r.count({i, m}) || !r.count({m, j})) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("to_relation agrees with the position oracle") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& w : enumerate_dyck(n)) CHECK(to_relation(w).pairs == oracle::relation_of(w.str()));
  }
}

TEST_CASE("the four non-degenerate 3-simplices as relations") {
  CHECK(to_relation(DyckWord("UDUDUDUD")).to_string() == "{}");
  CHECK(to_relation(DyckWord("UDUUDUDD")).to_string() == "1-2 2-3");
  CHECK(to_relation(DyckWord("UUDUDDUD")).to_string() == "0-1 1-2");
  CHECK(to_relation(DyckWord("UUDUDUDD")).to_string() == "0-1 1-2 2-3");
  CHECK(to_relation(DyckWord("UUDD")).to_string() == "0-1");
}

TEST_CASE("K_n enumeration agrees with filtering all pair subsets") {
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
    }
    std::vector<EdgeRelation> brute;
    for (long mask = 0; mask < (1L << all.size()); ++mask) {
      std::set<std::pair<int, int>> r;
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (mask & (1L << b)) r.insert(all[b]);
      }
      if (k_conditions(r, n)) brute.emplace_back(n, std::vector<VertexPair>(r.begin(), r.end()));
    }
    std::sort(brute.begin(), brute.end());
    CHECK(enumerate_k_relations(n) == brute);
  }
}

TEST_CASE("|K_n| = |C_n| and the correspondence is inverse and natural up to dimension 7") {
  for (int n = 0; n <= 7; ++n) {
    const auto words = enumerate_dyck(n);
    const auto ks = enumerate_k_relations(n);
    CHECK(ks.size() == words.size());
    std::vector<EdgeRelation> images;
    for (const auto& w : words) {
      const EdgeRelation r = to_relation(w);
      CHECK(is_k_relation(r.pairs, n));
      CHECK(from_relation(r) == w);
      images.push_back(r);
      for (int i = 0; n > 0 && i <= n; ++i) CHECK(to_relation(face(w, i)) == relation_face(r, i));
      for (int i = 0; i <= n; ++i) CHECK(to_relation(degeneracy(w, i)) == relation_degeneracy(r, i));
    }
    std::sort(images.begin(), images.end());
    CHECK(images == ks);
    for (const auto& r : ks) CHECK(to_relation(from_relation(r)) == r);
  }
}

TEST_CASE("K conditions are enforced") {
  CHECK_THROWS_AS(make_k_relation(2, {{0, 2}}), KConditionError);
  CHECK_THROWS_AS(make_k_relation(2, {{1, 0}}), KConditionError);
  CHECK_THROWS_AS(make_k_relation(2, {{0, 3}}), IndexError);
  CHECK_THROWS_AS(from_relation(EdgeRelation(2, {{0, 2}})), KConditionError);
  CHECK_FALSE(is_k_relation({{0, 2}, {0, 1}}, 2));
  CHECK(is_k_relation({{0, 1}, {1, 2}, {0, 2}}, 2));
  CHECK(make_k_relation(2, {{1, 2}, {0, 1}, {0, 1}}).to_string() == "0-1 1-2");
}

TEST_CASE("degeneracy relates the collapsed pair") {
  const EdgeRelation empty(1, {});
  CHECK(relation_degeneracy(empty, 0).to_string() == "0-1");
  CHECK(relation_degeneracy(empty, 1).to_string() == "1-2");
  CHECK(relation_face(EdgeRelation(2, {{0, 1}, {1, 2}, {0, 2}}), 1).to_string() == "0-1");
}

TEST_CASE("fillers reconstruct every simplex from its faces") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& w : enumerate_dyck(n)) {
      BoundaryTuple b{n, {}};
      for (int i = 0; i <= n; ++i) b.facets.push_back(to_relation(face(w, i)));
      CHECK(filler(b) == to_relation(w));
    }
  }
  // l has faces (i, s1c, t, s1c) and fills to 1-2 2-3
  const EdgeRelation i(2, {{0, 1}, {1, 2}}), s1c(2, {{1, 2}}), t(2, {});
  CHECK(filler({3, {i, s1c, t, s1c}}).to_string() == "1-2 2-3");
}

TEST_CASE("filler errors") {
  const EdgeRelation t(2, {}), i(2, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(filler({3, {i, t, t, t}}), BoundaryCompatibilityError);
  CHECK_THROWS_AS(filler({2, {EdgeRelation(1, {}), EdgeRelation(1, {}), EdgeRelation(1, {})}}),
                  PreconditionError);
}
