#include <map>
#include <set>

#include "catalan/dyck.hpp"
#include "catalan/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catalan;

namespace {

std::vector<std::string> strs(const std::vector<DyckWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

long catalan_closed_form(int m) {
  // binom(2m, m) / (m + 1) with exact intermediate products
  long r = 1;
  for (int i = 1; i <= m; ++i) r = r * (m + i) / i;
  return r / (m + 1);
}

}  // namespace

TEST_CASE("enumeration agrees with brute-force filtering") {
  for (int n = 0; n <= 6; ++n) CHECK(strs(enumerate_dyck(n)) == oracle::dyck_words(n));
}

TEST_CASE("census against the closed form") {
  const std::vector<long> frozen = {1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 8; ++n) {
    CHECK(static_cast<long>(enumerate_dyck(n).size()) == frozen[n]);
    CHECK(catalan_closed_form(n + 1) == frozen[n]);
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(DyckWord("UXD"), InvalidAlphabet);
  CHECK_THROWS_AS(DyckWord("DU"), PreconditionError);
  CHECK_THROWS_AS(DyckWord("UUD"), PreconditionError);
  CHECK_THROWS_AS(DyckWord(""), PreconditionError);
  CHECK_THROWS_AS(is_dyck("UDx"), InvalidAlphabet);
  CHECK(is_dyck("UUDD"));
  CHECK_FALSE(is_dyck("UDDU"));
  CHECK(DyckWord().str() == "UD");
  CHECK(DyckWord("UUDUDD").dimension() == 2);
}

TEST_CASE("faces and degeneracies match the string oracle") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_dyck(n)) {
      for (int i = 0; n > 0 && i <= n; ++i) CHECK(face(w, i).str() == oracle::delete_pair(w.str(), i));
      for (int i = 0; i <= n; ++i) CHECK(degeneracy(w, i).str() == oracle::double_pair(w.str(), i));
    }
  }
}

TEST_CASE("named low-dimensional faces") {
  // (d0, d1, d2) of the five 2-simplices
  const DyckWord c("UDUD"), e("UUDD");
  const std::map<std::string, std::vector<DyckWord>> expected = {
      {"UDUDUD", {c, c, c}}, {"UUDUDD", {e, c, e}}, {"UUDDUD", {c, c, e}},
      {"UDUUDD", {e, c, c}}, {"UUUDDD", {e, e, e}}};
  for (const auto& [word, faces] : expected) {
    const DyckWord w(word);
    for (int i = 0; i < 3; ++i) CHECK(face(w, i) == faces[i]);
  }
  CHECK(degeneracy(c, 0).str() == "UUDDUD");
  CHECK(degeneracy(c, 1).str() == "UDUUDD");
  CHECK(degeneracy(e, 0).str() == "UUUDDD");
  CHECK(degeneracy(DyckWord(), 0) == e);
}

TEST_CASE("face and degeneracy errors") {
  CHECK_THROWS_AS(face(DyckWord(), 0), NoFaceError);
  CHECK_THROWS_AS(face(DyckWord("UDUD"), 2), IndexError);
  CHECK_THROWS_AS(face(DyckWord("UDUD"), -1), IndexError);
  CHECK_THROWS_AS(degeneracy(DyckWord("UDUD"), 2), IndexError);
}

TEST_CASE("simplicial identities hold on words") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& x : enumerate_dyck(n)) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (n >= 2) CHECK(face(face(x, j), i) == face(face(x, i), j - 1));
        }
        for (int i = 0; i <= j; ++i) CHECK(degeneracy(degeneracy(x, j), i) == degeneracy(degeneracy(x, i), j + 1));
        for (int i = 0; i <= n + 1; ++i) {
          const DyckWord lhs = face(degeneracy(x, j), i);
          if (i < j) {
            CHECK(lhs == degeneracy(face(x, i), j - 1));
          } else if (i == j || i == j + 1) {
            CHECK(lhs == x);
          } else {
            CHECK(lhs == degeneracy(face(x, i - 1), j));
          }
        }
      }
    }
  }
}

TEST_CASE("degeneracy test agrees with searching the image of every s_i") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, int> smallest;
    for (const auto& y : enumerate_dyck(n - 1)) {
      for (int i = 0; i < n; ++i) {
        auto [it, fresh] = smallest.emplace(degeneracy(y, i).str(), i);
        if (!fresh) it->second = std::min(it->second, i);
      }
    }
    for (const auto& w : enumerate_dyck(n)) {
      const auto got = is_degenerate(w);
      const auto it = smallest.find(w.str());
      REQUIRE(got.has_value() == (it != smallest.end()));
      if (got) CHECK(*got == it->second);
    }
  }
  CHECK_FALSE(is_degenerate(DyckWord()));
}

TEST_CASE("surjections") {
  CHECK_THROWS_AS(SurjectionPath({1, 1}), PreconditionError);
  CHECK_THROWS_AS(SurjectionPath({0, 2}), PreconditionError);
  CHECK_THROWS_AS(SurjectionPath({0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(SurjectionPath({}), PreconditionError);
  CHECK(SurjectionPath::sigma(2, 1).image() == std::vector<int>{0, 1, 1, 2});
  CHECK(SurjectionPath::identity(2).is_identity());
  // count = binom(n, k): choose the k steps among n gaps; brute force the sequences
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      long brute = 0;
      for (long mask = 0; mask < (1L << n); ++mask) brute += __builtin_popcountl(mask) == k;
      const auto all = enumerate_surjections(n, k);
      CHECK(static_cast<long>(all.size()) == brute);
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const auto& a, const auto& b) { return a.image() < b.image(); }));
    }
  }
  // sigma_i acts as s_i; composition acts contravariantly
  for (const auto& y : enumerate_dyck(3)) {
    for (int i = 0; i <= 3; ++i) CHECK(apply_surjection(SurjectionPath::sigma(3, i), y) == degeneracy(y, i));
    const auto a = SurjectionPath::sigma(3, 1), b = SurjectionPath::sigma(4, 3);
    CHECK(apply_surjection(a.after(b), y) == apply_surjection(b, apply_surjection(a, y)));
  }
}

TEST_CASE("Eilenberg-Zilber decomposition against exhaustive search") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate_dyck(n)) {
      int hits = 0;
      std::vector<int> image;
      std::string base;
      for (int k = 0; k <= n; ++k) {
        for (const auto& y : enumerate_dyck(k)) {
          if (is_degenerate(y)) continue;
          for (const auto& phi : enumerate_surjections(n, k)) {
            if (apply_surjection(phi, y) == w) {
              ++hits;
              image = phi.image();
              base = y.str();
            }
          }
        }
      }
      CHECK(hits == 1);
      const auto [phi, y] = ez_decompose(w);
      CHECK(phi.image() == image);
      CHECK(y.str() == base);
    }
  }
  const auto [phi, y] = ez_decompose(DyckWord("UUUDDD"));
  CHECK(y == DyckWord());
  CHECK(phi.image() == std::vector<int>{0, 0, 0});
}
