#include "catalan/fin_monoidal.hpp"

#include <algorithm>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

bool in_range(int v, int n) { return v >= 0 && v < n; }

void check_square(const std::vector<std::vector<int>>& table, int n, int codomain,
                  const std::string& what, bool allow_undefined) {
  if (static_cast<int>(table.size()) != n) throw StructuralError(what + ": wrong row count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw StructuralError(what + ": wrong row length");
    for (int v : row) {
      if (allow_undefined && v == kUndefined) continue;
      if (!in_range(v, codomain)) {
        throw StructuralError(what + ": entry " + std::to_string(v) + " out of range");
      }
    }
  }
}

void check_structure(const FinCategory& c) {
  const int objs = c.object_count();
  const int mors = c.morphism_count();
  for (int f = 0; f < mors; ++f) {
    if (!in_range(c.morphisms[f].src, objs) || !in_range(c.morphisms[f].tgt, objs)) {
      throw StructuralError("morphism '" + c.morphisms[f].label + "' has a dangling endpoint");
    }
  }
  if (static_cast<int>(c.identity.size()) != objs) {
    throw StructuralError("identity table must have one entry per object");
  }
  for (int id : c.identity) {
    if (!in_range(id, mors)) throw StructuralError("identity refers to an unknown morphism");
  }
  check_square(c.compose, mors, mors, "compose", true);
  for (int a = 0; a < objs; ++a) {
    for (int b = a + 1; b < objs; ++b) {
      if (c.objects[a] == c.objects[b]) throw StructuralError("duplicate object '" + c.objects[a] + "'");
    }
  }
  for (int f = 0; f < mors; ++f) {
    for (int g = f + 1; g < mors; ++g) {
      if (c.label(f) == c.label(g)) throw StructuralError("duplicate morphism '" + c.label(f) + "'");
    }
  }
}

std::string pair_name(const FinCategory& c, int g, int f) {
  return c.label(g) + " o " + c.label(f);
}

}  // namespace

int FinCategory::comp(int g, int f) const {
  const int h = compose.at(g).at(f);
  if (h == kUndefined) {
    throw PreconditionError("composite " + label(g) + " o " + label(f) + " is undefined");
  }
  return h;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < morphism_count(); ++f) {
    if (morphisms[f].src == a && morphisms[f].tgt == b) out.push_back(f);
  }
  return out;
}

std::optional<int> FinCategory::find_object(const std::string& l) const {
  for (int a = 0; a < object_count(); ++a) {
    if (objects[a] == l) return a;
  }
  return std::nullopt;
}

std::optional<int> FinCategory::find_morphism(const std::string& l) const {
  for (int f = 0; f < morphism_count(); ++f) {
    if (morphisms[f].label == l) return f;
  }
  return std::nullopt;
}

Report validate_category(const FinCategory& c) {
  check_structure(c);
  Report out;
  const int mors = c.morphism_count();
  for (int a = 0; a < c.object_count(); ++a) {
    const int id = c.identity[a];
    if (c.src(id) != a || c.tgt(id) != a) {
      out.push_back({"identity-type", c.label(id) + " is not an endomorphism of " + c.objects[a]});
    }
  }
  if (!out.empty()) return out;
  for (int g = 0; g < mors; ++g) {
    for (int f = 0; f < mors; ++f) {
      const bool composable = c.tgt(f) == c.src(g);
      const int h = c.compose[g][f];
      if (composable != (h != kUndefined)) {
        out.push_back({"compose-domain", pair_name(c, g, f) +
                                             (composable ? " is missing" : " should be undefined")});
        continue;
      }
      if (composable && (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))) {
        out.push_back({"compose-type", pair_name(c, g, f) + " has the wrong endpoints"});
      }
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < mors; ++f) {
    if (c.compose[f][c.identity[c.src(f)]] != f) {
      out.push_back({"right-unit", c.label(f) + " o 1 != " + c.label(f)});
    }
    if (c.compose[c.identity[c.tgt(f)]][f] != f) {
      out.push_back({"left-unit", "1 o " + c.label(f) + " != " + c.label(f)});
    }
  }
  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      for (int h = 0; h < mors; ++h) {
        if (c.tgt(g) != c.src(h)) continue;
        if (c.compose[h][c.compose[g][f]] != c.compose[c.compose[h][g]][f]) {
          out.push_back({"associativity",
                         c.label(h) + ", " + c.label(g) + ", " + c.label(f)});
        }
      }
    }
  }
  return out;
}

Report validate_strict_monoidal(const FinMonoidalStructure& m) {
  Report out = validate_category(m.base);
  if (!out.empty()) return out;
  const FinCategory& c = m.base;
  const int objs = c.object_count();
  const int mors = c.morphism_count();
  check_square(m.obj_tensor, objs, objs, "object tensor", false);
  check_square(m.mor_tensor, mors, mors, "morphism tensor", false);
  if (!in_range(m.unit, objs)) throw StructuralError("unit is not an object");

  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      const int fg = m.mor_tensor[f][g];
      if (c.src(fg) != m.obj_tensor[c.src(f)][c.src(g)] ||
          c.tgt(fg) != m.obj_tensor[c.tgt(f)][c.tgt(g)]) {
        out.push_back({"tensor-type", c.label(f) + " (x) " + c.label(g) + " has the wrong endpoints"});
      }
    }
  }
  if (!out.empty()) return out;
  for (int a = 0; a < objs; ++a) {
    for (int b = 0; b < objs; ++b) {
      if (m.mor_tensor[c.identity[a]][c.identity[b]] != c.identity[m.obj_tensor[a][b]]) {
        out.push_back({"tensor-identity", "1_" + c.objects[a] + " (x) 1_" + c.objects[b]});
      }
    }
  }
  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      for (int f2 = 0; f2 < mors; ++f2) {
        for (int g2 = 0; g2 < mors; ++g2) {
          if (c.tgt(f2) != c.src(g2)) continue;
          const int lhs = m.mor_tensor[c.compose[g][f]][c.compose[g2][f2]];
          const int rhs = c.compose[m.mor_tensor[g][g2]][m.mor_tensor[f][f2]];
          if (lhs != rhs) {
            out.push_back({"interchange", "(" + pair_name(c, g, f) + ") (x) (" +
                                              pair_name(c, g2, f2) + ")"});
          }
        }
      }
    }
  }
  for (int a = 0; a < objs; ++a) {
    if (m.obj_tensor[m.unit][a] != a || m.obj_tensor[a][m.unit] != a) {
      out.push_back({"object-unit", c.objects[a]});
    }
    for (int b = 0; b < objs; ++b) {
      for (int d = 0; d < objs; ++d) {
        if (m.obj_tensor[m.obj_tensor[a][b]][d] != m.obj_tensor[a][m.obj_tensor[b][d]]) {
          out.push_back({"object-associativity", c.objects[a] + ", " + c.objects[b] + ", " +
                                                     c.objects[d]});
        }
      }
    }
  }
  const int unit_id = c.identity[m.unit];
  for (int f = 0; f < mors; ++f) {
    if (m.mor_tensor[unit_id][f] != f || m.mor_tensor[f][unit_id] != f) {
      out.push_back({"morphism-unit", c.label(f)});
    }
    for (int g = 0; g < mors; ++g) {
      for (int h = 0; h < mors; ++h) {
        if (m.mor_tensor[m.mor_tensor[f][g]][h] != m.mor_tensor[f][m.mor_tensor[g][h]]) {
          out.push_back({"morphism-associativity",
                         c.label(f) + ", " + c.label(g) + ", " + c.label(h)});
        }
      }
    }
  }
  return out;
}

Report validate_monoidal_poset(const MonoidalPoset& p) {
  const int n = p.size();
  if (static_cast<int>(p.leq.size()) != n) throw StructuralError("order table has the wrong size");
  for (const auto& row : p.leq) {
    if (static_cast<int>(row.size()) != n) throw StructuralError("order table has the wrong size");
  }
  check_square(p.tensor, n, n, "tensor", false);
  if (!in_range(p.unit, n)) throw StructuralError("unit is not an element");
  Report out;
  const auto& e = p.elements;
  for (int a = 0; a < n; ++a) {
    if (!p.leq[a][a]) out.push_back({"reflexivity", e[a]});
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq[a][b] && p.leq[b][a]) out.push_back({"antisymmetry", e[a] + ", " + e[b]});
      for (int c = 0; c < n; ++c) {
        if (p.leq[a][b] && p.leq[b][c] && !p.leq[a][c]) {
          out.push_back({"transitivity", e[a] + ", " + e[b] + ", " + e[c]});
        }
        if (p.tensor[p.tensor[a][b]][c] != p.tensor[a][p.tensor[b][c]]) {
          out.push_back({"associativity", e[a] + ", " + e[b] + ", " + e[c]});
        }
      }
    }
    if (p.tensor[p.unit][a] != a || p.tensor[a][p.unit] != a) out.push_back({"unit", e[a]});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!p.leq[a][b]) continue;
      for (int c = 0; c < n; ++c) {
        if (!p.leq[p.tensor[a][c]][p.tensor[b][c]] || !p.leq[p.tensor[c][a]][p.tensor[c][b]]) {
          out.push_back({"monotonicity", e[a] + " <= " + e[b] + " against " + e[c]});
        }
      }
    }
  }
  return out;
}

FinMonoidalStructure poset_as_category(const MonoidalPoset& p) {
  const int n = p.size();
  FinMonoidalStructure m;
  FinCategory& c = m.base;
  c.objects = p.elements;
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, kUndefined));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!p.leq[a][b]) continue;
      arrow[a][b] = c.morphism_count();
      c.morphisms.push_back({p.elements[a] + "<=" + p.elements[b], a, b});
    }
  }
  for (int a = 0; a < n; ++a) c.identity.push_back(arrow[a][a]);
  const int mors = c.morphism_count();
  c.compose.assign(mors, std::vector<int>(mors, kUndefined));
  for (int g = 0; g < mors; ++g) {
    for (int f = 0; f < mors; ++f) {
      if (c.tgt(f) == c.src(g)) c.compose[g][f] = arrow[c.src(f)][c.tgt(g)];
    }
  }
  m.obj_tensor = p.tensor;
  m.mor_tensor.assign(mors, std::vector<int>(mors, 0));
  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      const int s = p.tensor[c.src(f)][c.src(g)];
      const int t = p.tensor[c.tgt(f)][c.tgt(g)];
      if (arrow[s][t] == kUndefined) {
        throw PreconditionError("tensor is not monotone on " + c.label(f) + ", " + c.label(g));
      }
      m.mor_tensor[f][g] = arrow[s][t];
    }
  }
  m.unit = p.unit;
  return m;
}

bool is_monoid(const FinMonoidalStructure& m, const MonoidObject& x) {
  const FinCategory& c = m.base;
  const int a = x.carrier;
  const int aa = m.tensor(a, a);
  if (c.src(x.mu) != aa || c.tgt(x.mu) != a) return false;
  if (c.src(x.eta) != m.unit || c.tgt(x.eta) != a) return false;
  const int id = c.identity[a];
  // Strictness: (A⊗A)⊗A = A⊗(A⊗A), A⊗I = A = I⊗A, and the constraints are identities.
  const bool assoc = c.comp(x.mu, m.tensor_mor(x.mu, id)) == c.comp(x.mu, m.tensor_mor(id, x.mu));
  const bool right = c.comp(x.mu, m.tensor_mor(id, x.eta)) == id;
  const bool left = c.comp(x.mu, m.tensor_mor(x.eta, id)) == id;
  return assoc && right && left;
}

std::vector<MonoidObject> enumerate_monoids(const FinMonoidalStructure& m) {
  std::vector<MonoidObject> out;
  const FinCategory& c = m.base;
  for (int a = 0; a < c.object_count(); ++a) {
    for (int mu : c.hom(m.tensor(a, a), a)) {
      for (int eta : c.hom(m.unit, a)) {
        MonoidObject candidate{a, mu, eta};
        if (is_monoid(m, candidate)) out.push_back(candidate);
      }
    }
  }
  return out;
}

namespace library {

namespace {

MonoidalPoset chain(std::vector<std::string> names, auto op, int unit) {
  MonoidalPoset p;
  const int n = static_cast<int>(names.size());
  p.elements = std::move(names);
  p.leq.assign(n, std::vector<bool>(n, false));
  p.tensor.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      p.leq[a][b] = a <= b;
      p.tensor[a][b] = op(a, b);
    }
  }
  p.unit = unit;
  return p;
}

}  // namespace

MonoidalPoset two_or_poset() {
  return chain({"bot", "top"}, [](int a, int b) { return std::max(a, b); }, 0);
}

MonoidalPoset chain3_max_poset() {
  return chain({"0", "1", "2"}, [](int a, int b) { return std::max(a, b); }, 0);
}

MonoidalPoset chain3_trunc_add_poset() {
  return chain({"0", "1", "2"}, [](int a, int b) { return std::min(a + b, 2); }, 0);
}

MonoidalPoset antichain2_poset() {
  MonoidalPoset p;
  p.elements = {"u", "x"};
  p.leq = {{true, false}, {false, true}};
  p.tensor = {{0, 1}, {1, 1}};
  p.unit = 0;
  return p;
}

FinMonoidalStructure two_or() { return poset_as_category(two_or_poset()); }
FinMonoidalStructure chain3_max() { return poset_as_category(chain3_max_poset()); }
FinMonoidalStructure chain3_trunc_add() { return poset_as_category(chain3_trunc_add_poset()); }
FinMonoidalStructure antichain2() { return poset_as_category(antichain2_poset()); }

FinMonoidalStructure one_object_1z() {
  FinMonoidalStructure m;
  m.base.objects = {"*"};
  m.base.morphisms = {{"1", 0, 0}, {"z", 0, 0}};
  m.base.identity = {0};
  // Multiplication in {1, z} with z z = z.
  m.base.compose = {{0, 1}, {1, 1}};
  m.obj_tensor = {{0}};
  m.mor_tensor = {{0, 1}, {1, 1}};
  m.unit = 0;
  return m;
}

std::vector<Named> classification_library() {
  return {
      {"two-or", two_or()},
      {"chain3-max", chain3_max()},
      {"chain3-trunc-add", chain3_trunc_add()},
      {"antichain2", antichain2()},
      {"one-object-1z", one_object_1z()},
  };
}

}  // namespace library

}  // namespace catalan
