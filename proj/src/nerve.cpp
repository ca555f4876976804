#include "catalan/nerve.hpp"

#include <algorithm>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

std::vector<NerveTriangle> all_triangles(const FinMonoidalStructure& m) {
  const FinCategory& c = m.base;
  std::vector<NerveTriangle> out;
  for (int a12 = 0; a12 < c.object_count(); ++a12) {
    for (int a01 = 0; a01 < c.object_count(); ++a01) {
      const int src = m.tensor(a12, a01);
      for (int f = 0; f < c.morphism_count(); ++f) {
        if (c.src(f) == src) out.push_back({a12, c.tgt(f), a01, f});
      }
    }
  }
  return out;
}

}  // namespace

std::string triangle_label(const FinMonoidalStructure& m, const NerveTriangle& t) {
  const auto& objs = m.base.objects;
  return m.base.label(t.mor) + "[" + objs[t.a12] + "|" + objs[t.a02] + "|" + objs[t.a01] + "]";
}

bool tetrahedron_commutes(const FinMonoidalStructure& m, const NerveTriangle& x0,
                          const NerveTriangle& x1, const NerveTriangle& x2,
                          const NerveTriangle& x3) {
  const FinCategory& c = m.base;
  const int id01 = c.identity[x3.a01];
  const int id23 = c.identity[x0.a12];
  const int lhs = c.comp(x2.mor, m.tensor_mor(x0.mor, id01));
  const int rhs = c.comp(x1.mor, m.tensor_mor(id23, x3.mor));
  return lhs == rhs;
}

TruncatedSSet monoidal_nerve(const FinMonoidalStructure& m, int top, std::size_t budget) {
  if (top < 0) throw PreconditionError("truncation dimension must be non-negative");
  if (top > kMaxNerveDimension) {
    throw BudgetError("nerve truncation is capped at dimension " +
                      std::to_string(kMaxNerveDimension));
  }
  if (const Report r = validate_strict_monoidal(m); !r.empty()) {
    throw StructuralError("not a strict monoidal structure: " + r.front().law + " (" +
                          r.front().detail + ")");
  }
  const FinCategory& c = m.base;
  const int objs = c.object_count();
  const std::vector<NerveTriangle> tris = all_triangles(m);

  SSetTables t;
  t.top = std::min(top, 2);
  t.levels = {{"*"}, c.objects};
  t.faces = {{}, {{std::vector<int>(objs, 0)}, {std::vector<int>(objs, 0)}}};
  t.degeneracies = {{{m.unit}}, {}};
  if (top == 0) {
    return TruncatedSSet(SSetTables{0, {{"*"}}, {{}}, {{}}});
  }
  if (top >= 2) {
    auto& labels = t.levels.emplace_back();
    std::vector<std::vector<int>> faces(3);
    for (const auto& tri : tris) {
      labels.push_back(triangle_label(m, tri));
      faces[0].push_back(tri.a12);
      faces[1].push_back(tri.a02);
      faces[2].push_back(tri.a01);
    }
    t.faces.push_back(std::move(faces));
    // s_0 A = (A, A, I, 1_A) and s_1 A = (I, A, A, 1_A): strict unit constraints.
    auto& degens = t.degeneracies[1];
    degens.assign(2, std::vector<int>(objs));
    for (int a = 0; a < objs; ++a) {
      const NerveTriangle s0{a, a, m.unit, c.identity[a]};
      const NerveTriangle s1{m.unit, a, a, c.identity[a]};
      degens[0][a] = static_cast<int>(std::find(tris.begin(), tris.end(), s0) - tris.begin());
      degens[1][a] = static_cast<int>(std::find(tris.begin(), tris.end(), s1) - tris.begin());
    }
    t.degeneracies.emplace_back();
  } else {
    t.top = 1;
    t.degeneracies[1].clear();
  }
  if (tris.size() + objs + 1 > budget) throw BudgetError("nerve exceeds the simplex budget");
  TruncatedSSet two(t);
  if (top <= 2) return two;

  // Level 3: compatible quadruples whose square commutes.
  std::vector<Boundary> tets;
  for (const auto& b : boundaries(two, 3, budget)) {
    if (tetrahedron_commutes(m, tris[b[0]], tris[b[1]], tris[b[2]], tris[b[3]])) tets.push_back(b);
  }
  if (tris.size() + objs + 1 + tets.size() > budget) {
    throw BudgetError("nerve exceeds the simplex budget");
  }
  auto& labels = t.levels.emplace_back();
  auto& faces = t.faces.emplace_back(4, std::vector<int>(tets.size()));
  for (std::size_t x = 0; x < tets.size(); ++x) {
    std::string l = "<";
    for (int i = 0; i < 4; ++i) {
      faces[i][x] = tets[x][i];
      l += (i ? "," : "") + std::to_string(tets[x][i]);
    }
    labels.push_back(l + ">");
  }
  auto& degens = t.degeneracies[2];
  degens.assign(3, std::vector<int>(tris.size()));
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < static_cast<int>(tris.size()); ++x) {
      Boundary b(4);
      for (int j = 0; j <= 3; ++j) {
        if (j < i) {
          b[j] = two.degeneracy(1, i - 1, two.face(2, j, x));
        } else if (j == i || j == i + 1) {
          b[j] = x;
        } else {
          b[j] = two.degeneracy(1, i, two.face(2, j - 1, x));
        }
      }
      auto it = std::lower_bound(tets.begin(), tets.end(), b);
      if (it == tets.end() || *it != b) {
        throw StructuralError("degenerate 3-simplex s_" + std::to_string(i) + "(" +
                              two.label(2, x) + ") missing; the unit is not strict");
      }
      degens[i][x] = static_cast<int>(it - tets.begin());
    }
  }
  t.degeneracies.emplace_back();
  t.top = 3;
  return coskeletal_extension(TruncatedSSet(std::move(t)), top, budget);
}

NerveTriangle nerve_triangle(const FinMonoidalStructure& m, const TruncatedSSet& nerve, int x) {
  const int a12 = nerve.face(2, 0, x);
  const int a02 = nerve.face(2, 1, x);
  const int a01 = nerve.face(2, 2, x);
  const FinCategory& c = m.base;
  const int src = m.tensor(a12, a01);
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.src(f) != src || c.tgt(f) != a02) continue;
    const NerveTriangle t{a12, a02, a01, f};
    if (triangle_label(m, t) == nerve.label(2, x)) return t;
  }
  throw PreconditionError("simplex is not a triangle of this nerve");
}

}  // namespace catalan
