#include "catalan/skew.hpp"

#include <algorithm>
#include <functional>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

bool in_range(int v, int n) { return v >= 0 && v < n; }

std::string bad_component(const std::string& what) {
  return what + " has the wrong source or target";
}

/// Bifunctoriality of a tensor given by tables; first failure as text.
std::optional<std::string> bifunctor_failure(const FinCategory& c,
                                             const std::vector<std::vector<int>>& ot,
                                             const std::vector<std::vector<int>>& mt) {
  const int mors = c.morphism_count();
  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      const int fg = mt[f][g];
      if (c.src(fg) != ot[c.src(f)][c.src(g)] || c.tgt(fg) != ot[c.tgt(f)][c.tgt(g)]) {
        return c.label(f) + " (x) " + c.label(g) + " has the wrong endpoints";
      }
    }
  }
  for (int a = 0; a < c.object_count(); ++a) {
    for (int b = 0; b < c.object_count(); ++b) {
      if (mt[c.identity[a]][c.identity[b]] != c.identity[ot[a][b]]) {
        return "tensor does not preserve identities at " + c.objects[a] + ", " + c.objects[b];
      }
    }
  }
  for (int f = 0; f < mors; ++f) {
    for (int g = 0; g < mors; ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      for (int f2 = 0; f2 < mors; ++f2) {
        for (int g2 = 0; g2 < mors; ++g2) {
          if (c.tgt(f2) != c.src(g2)) continue;
          if (mt[c.compose[g][f]][c.compose[g2][f2]] != c.compose[mt[g][g2]][mt[f][f2]]) {
            return "interchange fails at " + c.label(g) + " o " + c.label(f) + " (x) " +
                   c.label(g2) + " o " + c.label(f2);
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct Pentagon {
  // X -ab-> Y -bd-> Z -de-> W  against  X -ac-> V -ce-> W.
  int ab, bd, de, ac, ce;
};

bool commutes(const FinCategory& c, const Pentagon& p) {
  return c.comp(p.de, c.comp(p.bd, p.ab)) == c.comp(p.ce, p.ac);
}

ConditionResult run(const std::string& name, int arity, int objects,
                    const std::function<bool(const std::vector<int>&)>& holds) {
  ConditionResult r{name, true, {}};
  std::vector<int> tuple(arity, 0);
  while (true) {
    if (!holds(tuple)) {
      r.pass = false;
      r.witness = tuple;
      return r;
    }
    int k = arity - 1;
    while (k >= 0 && ++tuple[k] == objects) tuple[k--] = 0;
    if (k < 0) return r;
  }
}

}  // namespace

void check_skew_structure(const SkewData& d) {
  const FinCategory& c = d.base;
  if (const Report r = validate_category(c); !r.empty()) {
    throw StructuralError("base is not a category: " + r.front().law + " (" + r.front().detail + ")");
  }
  const int n = c.object_count();
  const int mors = c.morphism_count();
  auto square = [](const std::vector<std::vector<int>>& t, int size, int codomain) {
    if (static_cast<int>(t.size()) != size) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != size) return false;
      for (int v : row) {
        if (!in_range(v, codomain)) return false;
      }
    }
    return true;
  };
  if (!square(d.obj_tensor, n, n)) throw StructuralError("object tensor table is malformed");
  if (!square(d.mor_tensor, mors, mors)) throw StructuralError("morphism tensor table is malformed");
  if (!in_range(d.unit, n)) throw StructuralError("unit is not an object");
  if (auto why = bifunctor_failure(c, d.obj_tensor, d.mor_tensor)) {
    throw StructuralError("tensor is not a bifunctor: " + *why);
  }
  if (static_cast<int>(d.alpha.size()) != n || static_cast<int>(d.lambda.size()) != n ||
      static_cast<int>(d.rho.size()) != n) {
    throw StructuralError("constraint tables need one entry per object");
  }
  const int unit = d.unit;
  auto typed = [&](int f, int s, int t) { return in_range(f, mors) && c.src(f) == s && c.tgt(f) == t; };
  for (int a = 0; a < n; ++a) {
    if (!square(d.alpha[a], n, mors)) throw StructuralError("alpha table is malformed");
    for (int b = 0; b < n; ++b) {
      for (int e = 0; e < n; ++e) {
        if (!typed(d.alpha[a][b][e], d.tensor(d.tensor(a, b), e), d.tensor(a, d.tensor(b, e)))) {
          throw StructuralError(bad_component("alpha_" + c.objects[a] + "," + c.objects[b] + "," +
                                              c.objects[e]));
        }
      }
    }
    if (!typed(d.lambda[a], d.tensor(unit, a), a)) {
      throw StructuralError(bad_component("lambda_" + c.objects[a]));
    }
    if (!typed(d.rho[a], a, d.tensor(a, unit))) {
      throw StructuralError(bad_component("rho_" + c.objects[a]));
    }
  }
  if (d.kappa && !typed(*d.kappa, unit, unit)) throw StructuralError(bad_component("kappa"));
}

Report check_naturality(const SkewData& d) {
  check_skew_structure(d);
  const FinCategory& c = d.base;
  const int mors = c.morphism_count();
  const int unit_id = c.identity[d.unit];
  Report out;
  for (int f = 0; f < mors; ++f) {
    const int a = c.src(f), a2 = c.tgt(f);
    if (c.comp(d.lambda[a2], d.tensor_mor(unit_id, f)) != c.comp(f, d.lambda[a])) {
      out.push_back({"lambda-naturality", c.label(f)});
    }
    if (c.comp(d.rho[a2], f) != c.comp(d.tensor_mor(f, unit_id), d.rho[a])) {
      out.push_back({"rho-naturality", c.label(f)});
    }
    for (int g = 0; g < mors; ++g) {
      const int b = c.src(g), b2 = c.tgt(g);
      for (int h = 0; h < mors; ++h) {
        const int e = c.src(h), e2 = c.tgt(h);
        const int lhs = c.comp(d.alpha[a2][b2][e2], d.tensor_mor(d.tensor_mor(f, g), h));
        const int rhs = c.comp(d.tensor_mor(f, d.tensor_mor(g, h)), d.alpha[a][b][e]);
        if (lhs != rhs) {
          out.push_back({"alpha-naturality", c.label(f) + ", " + c.label(g) + ", " + c.label(h)});
        }
      }
    }
  }
  return out;
}

bool PentagonReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

const ConditionResult& PentagonReport::at(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return c;
  }
  throw PreconditionError("no condition named " + name);
}

PentagonReport check_axioms(const SkewData& d) {
  check_skew_structure(d);
  const FinCategory& c = d.base;
  const int n = c.object_count();
  const int unit = d.unit;
  auto id = [&](int a) { return c.identity[a]; };
  auto T = [&](int a, int b) { return d.tensor(a, b); };
  auto Tm = [&](int f, int g) { return d.tensor_mor(f, g); };
  const auto& al = d.alpha;
  const auto& la = d.lambda;
  const auto& rh = d.rho;

  PentagonReport r;
  // alpha_{A,B,CD} alpha_{AB,C,D} = (1 alpha_{BCD}) alpha_{A,BC,D} (alpha_{ABC} 1)
  r.conditions.push_back(run("5.1", 4, n, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1], cc = x[2], dd = x[3];
    const int lhs = c.comp(al[a][b][T(cc, dd)], al[T(a, b)][cc][dd]);
    const int rhs = c.comp(Tm(id(a), al[b][cc][dd]),
                           c.comp(al[a][T(b, cc)][dd], Tm(al[a][b][cc], id(dd))));
    return lhs == rhs;
  }));
  // (1 lambda_B) alpha_{A,I,B} (rho_A 1) = 1_{AB}
  r.conditions.push_back(run("5.2", 2, n, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return c.comp(Tm(id(a), la[b]), c.comp(al[a][unit][b], Tm(rh[a], id(b)))) == id(T(a, b));
  }));
  // lambda_{AB} alpha_{I,A,B} = lambda_A 1
  r.conditions.push_back(run("5.3", 2, n, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return c.comp(la[T(a, b)], al[unit][a][b]) == Tm(la[a], id(b));
  }));
  // alpha_{A,B,I} rho_{AB} = 1 rho_B
  r.conditions.push_back(run("5.4", 2, n, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return c.comp(al[a][b][unit], rh[T(a, b)]) == Tm(id(a), rh[b]);
  }));
  // lambda_I rho_I = 1_I
  ConditionResult unit_law{"5.5", c.comp(la[unit], rh[unit]) == id(unit), {}};
  if (!unit_law.pass) unit_law.witness = {unit};
  r.conditions.push_back(unit_law);
  return r;
}

PentagonReport check_pentagons(const SkewData& d) {
  check_skew_structure(d);
  const FinCategory& c = d.base;
  const int n = c.object_count();
  const int unit = d.unit;
  auto id = [&](int a) { return c.identity[a]; };
  auto T = [&](int a, int b) { return d.tensor(a, b); };
  auto Tm = [&](int f, int g) { return d.tensor_mor(f, g); };
  const auto& al = d.alpha;
  const auto& la = d.lambda;
  const auto& rh = d.rho;
  const int kappa = d.kappa_or_identity();
  const int one = id(unit);

  PentagonReport r;
  auto add = [&](const std::string& name, int arity, auto make) {
    r.conditions.push_back(run(name, arity, n, [&](const std::vector<int>& x) {
      return commutes(c, make(x));
    }));
  };
  auto add_unit = [&](const std::string& name, const Pentagon& p) {
    ConditionResult res{name, commutes(c, p), {}};
    if (!res.pass) res.witness = {unit};
    r.conditions.push_back(res);
  };

  // ((AB)C)D -> (A(BC))D -> A((BC)D) -> A(B(CD))  vs  ((AB)C)D -> (AB)(CD) -> A(B(CD))
  add("A1", 4, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1], cc = x[2], dd = x[3];
    return Pentagon{Tm(al[a][b][cc], id(dd)), al[a][T(b, cc)][dd], Tm(id(a), al[b][cc][dd]),
                    al[T(a, b)][cc][dd], al[a][b][T(cc, dd)]};
  });
  // AB -> (AI)B -> A(IB) -> AB  vs  AB = AB = AB
  add("A2", 2, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return Pentagon{Tm(rh[a], id(b)), al[a][unit][b], Tm(id(a), la[b]), id(T(a, b)), id(T(a, b))};
  });
  // (IA)B -> AB = AB = AB  vs  (IA)B -> I(AB) -> AB
  add("A3", 2, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return Pentagon{Tm(la[a], id(b)), id(T(a, b)), id(T(a, b)), al[unit][a][b], la[T(a, b)]};
  });
  // AB = AB = AB -> A(BI)  vs  AB -> (AB)I -> A(BI)
  add("A4", 2, [&](const std::vector<int>& x) {
    const int a = x[0], b = x[1];
    return Pentagon{id(T(a, b)), id(T(a, b)), Tm(id(a), rh[b]), rh[T(a, b)], al[a][b][unit]};
  });
  add_unit("A5", Pentagon{one, kappa, one, one, one});
  add_unit("A6", Pentagon{one, kappa, one, rh[unit], la[unit]});
  add_unit("A7", Pentagon{kappa, one, kappa, rh[unit], la[unit]});
  // A -> AI = AI -> AI (1 kappa)  vs  A -> AI = AI
  add("A8", 1, [&](const std::vector<int>& x) {
    const int a = x[0];
    return Pentagon{rh[a], id(T(a, unit)), Tm(id(a), kappa), rh[a], id(T(a, unit))};
  });
  // IA -> IA (kappa 1) = IA -> A  vs  IA = IA -> A
  add("A9", 1, [&](const std::vector<int>& x) {
    const int a = x[0];
    return Pentagon{Tm(kappa, id(a)), id(T(unit, a)), la[a], id(T(unit, a)), la[a]};
  });
  return r;
}

bool verify_equivalence(const SkewData& d) {
  const bool pentagons = check_pentagons(d).all_pass();
  const bool axioms = check_axioms(d).all_pass();
  const bool trivial_kappa = d.kappa_or_identity() == d.base.identity[d.unit];
  return pentagons == (axioms && trivial_kappa);
}

bool is_monoidal(const SkewData& d) {
  check_skew_structure(d);
  const FinCategory& c = d.base;
  auto invertible = [&](int f) {
    for (int g : c.hom(c.tgt(f), c.src(f))) {
      if (c.comp(g, f) == c.identity[c.src(f)] && c.comp(f, g) == c.identity[c.tgt(f)]) return true;
    }
    return false;
  };
  const int n = c.object_count();
  for (int a = 0; a < n; ++a) {
    if (!invertible(d.lambda[a]) || !invertible(d.rho[a])) return false;
    for (int b = 0; b < n; ++b) {
      for (int e = 0; e < n; ++e) {
        if (!invertible(d.alpha[a][b][e])) return false;
      }
    }
  }
  return true;
}

std::optional<SkewData> skew_from_poset(const MonoidalPoset& p) {
  const FinMonoidalStructure m = poset_as_category(p);
  const FinCategory& c = m.base;
  const int n = p.size();
  auto arrow = [&](int a, int b) -> std::optional<int> {
    const auto h = c.hom(a, b);
    if (h.empty()) return std::nullopt;
    return h.front();
  };
  SkewData d;
  d.base = c;
  d.obj_tensor = m.obj_tensor;
  d.mor_tensor = m.mor_tensor;
  d.unit = p.unit;
  d.alpha.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int e = 0; e < n; ++e) {
        const auto f = arrow(p.tensor[p.tensor[a][b]][e], p.tensor[a][p.tensor[b][e]]);
        if (!f) return std::nullopt;
        d.alpha[a][b][e] = *f;
      }
    }
    const auto l = arrow(p.tensor[p.unit][a], a);
    const auto r = arrow(a, p.tensor[a][p.unit]);
    if (!l || !r) return std::nullopt;
    d.lambda.push_back(*l);
    d.rho.push_back(*r);
  }
  return d;
}

namespace {

FinCategory chain_category(int n) {
  MonoidalPoset p;
  for (int a = 0; a < n; ++a) p.elements.push_back(std::to_string(a));
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) p.leq[a][b] = true;
  }
  // Any tensor works here; only the category is kept.
  p.tensor.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) p.tensor[a][b] = std::max(a, b);
  }
  return poset_as_category(p).base;
}

FinCategory retract_category() {
  // l r = 1_I, r l = e, e idempotent.
  FinCategory c;
  c.objects = {"I", "J"};
  c.morphisms = {{"1_I", 0, 0}, {"1_J", 1, 1}, {"r", 0, 1}, {"l", 1, 0}, {"e", 1, 1}};
  c.identity = {0, 1};
  const int u = kUndefined;
  // compose[g][f] = g o f
  c.compose = {
      {0, u, u, 3, u},  // 1_I o f
      {u, 1, 2, u, 4},  // 1_J o f
      {2, u, u, 4, u},  // r o f
      {u, 3, 0, u, 3},  // l o f
      {u, 4, 2, u, 4},  // e o f
  };
  return c;
}

}  // namespace

Carrier named_carrier(const std::string& name) {
  if (name == "point") return {name, chain_category(1), true};
  if (name == "chain2") return {name, chain_category(2), true};
  if (name == "chain3") return {name, chain_category(3), true};
  if (name == "antichain2") return {name, library::antichain2().base, true};
  if (name == "one-object-1z") return {name, library::one_object_1z().base, false};
  if (name == "retract") return {name, retract_category(), false};
  throw PreconditionError("unknown carrier '" + name + "'");
}

std::vector<std::string> carrier_names() {
  return {"point", "chain2", "chain3", "antichain2", "one-object-1z", "retract"};
}

std::vector<SkewData> enumerate_skew_candidates(const Carrier& carrier, const SweepOptions& options) {
  const FinCategory& c = carrier.category;
  if (const Report r = validate_category(c); !r.empty()) {
    throw StructuralError("carrier is not a category: " + r.front().law);
  }
  const int n = c.object_count();
  const int mors = c.morphism_count();
  if (carrier.is_poset ? n > 3 : (n > 2 || mors > 6)) {
    throw BudgetError("carrier '" + carrier.name + "' is too large to sweep");
  }
  std::size_t examined = 0;
  auto charge = [&](std::size_t k) {
    examined += k;
    if (examined > options.budget) {
      throw BudgetError("sweep over '" + carrier.name + "' exceeded its budget of " +
                        std::to_string(options.budget) + " search nodes");
    }
  };

  std::vector<int> non_identity;
  for (int f = 0; f < mors; ++f) {
    if (c.identity[c.src(f)] != f) non_identity.push_back(f);
  }

  std::vector<SkewData> out;
  std::vector<std::vector<int>> ot(n, std::vector<int>(n, 0));
  std::vector<int> cells(n * n, 0);
  std::vector<std::vector<int>> right(n, std::vector<int>(mors, -1));  // f (x) 1_b
  std::vector<std::vector<int>> left(n, std::vector<int>(mors, -1));   // 1_a (x) g

  // Components chosen once the tensor and unit are fixed, by backtracking over
  // slots alpha[a][b][e], lambda[a], rho[a], kappa. Each naturality square is
  // checked as soon as both of its components are assigned.
  const int alpha_slots = n * n * n;
  auto alpha_slot = [&](int a, int b, int e) { return (a * n + b) * n + e; };
  const int slot_count = alpha_slots + 2 * n + 1;
  struct Square {
    int kind;  // 0 lambda, 1 rho, 2 alpha
    int f, g, h;
  };
  auto emit_components = [&](const std::vector<std::vector<int>>& mt) {
    for (int unit = 0; unit < n; ++unit) {
      std::vector<std::vector<int>> options_at(slot_count);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int e = 0; e < n; ++e) {
            options_at[alpha_slot(a, b, e)] = c.hom(ot[ot[a][b]][e], ot[a][ot[b][e]]);
          }
        }
        options_at[alpha_slots + a] = c.hom(ot[unit][a], a);
        options_at[alpha_slots + n + a] = c.hom(a, ot[a][unit]);
      }
      options_at[slot_count - 1] =
          options.all_kappas ? c.hom(unit, unit) : std::vector<int>{c.identity[unit]};
      if (std::any_of(options_at.begin(), options_at.end(), [](const auto& o) { return o.empty(); })) {
        continue;
      }

      const int unit_id = c.identity[unit];
      std::vector<std::vector<Square>> due(slot_count);
      for (int f = 0; f < mors; ++f) {
        due[alpha_slots + std::max(c.src(f), c.tgt(f))].push_back({0, f, 0, 0});
        due[alpha_slots + n + std::max(c.src(f), c.tgt(f))].push_back({1, f, 0, 0});
        for (int g = 0; g < mors; ++g) {
          for (int h = 0; h < mors; ++h) {
            const int last = std::max(alpha_slot(c.src(f), c.src(g), c.src(h)),
                                      alpha_slot(c.tgt(f), c.tgt(g), c.tgt(h)));
            due[last].push_back({2, f, g, h});
          }
        }
      }
      std::vector<int> val(slot_count, -1);
      auto holds = [&](const Square& q) {
        const int f = q.f;
        if (q.kind == 0) {
          return c.comp(val[alpha_slots + c.tgt(f)], mt[unit_id][f]) ==
                 c.comp(f, val[alpha_slots + c.src(f)]);
        }
        if (q.kind == 1) {
          return c.comp(val[alpha_slots + n + c.tgt(f)], f) ==
                 c.comp(mt[f][unit_id], val[alpha_slots + n + c.src(f)]);
        }
        const int g = q.g, h = q.h;
        const int to = val[alpha_slot(c.tgt(f), c.tgt(g), c.tgt(h))];
        const int from = val[alpha_slot(c.src(f), c.src(g), c.src(h))];
        return c.comp(to, mt[mt[f][g]][h]) == c.comp(mt[f][mt[g][h]], from);
      };
      auto assign = [&](auto&& self, int k) -> void {
        if (k == slot_count) {
          SkewData d;
          d.base = c;
          d.obj_tensor = ot;
          d.mor_tensor = mt;
          d.unit = unit;
          d.alpha.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              for (int e = 0; e < n; ++e) d.alpha[a][b][e] = val[alpha_slot(a, b, e)];
            }
            d.lambda.push_back(val[alpha_slots + a]);
            d.rho.push_back(val[alpha_slots + n + a]);
          }
          if (val[k - 1] != unit_id) d.kappa = val[k - 1];
          out.push_back(std::move(d));
          return;
        }
        for (int v : options_at[k]) {
          charge(1);
          val[k] = v;
          if (std::all_of(due[k].begin(), due[k].end(), holds)) self(self, k + 1);
        }
        val[k] = -1;
      };
      assign(assign, 0);
    }
  };

  // f ⊗ g = (f ⊗ 1_{tg}) ∘ (1_{sf} ⊗ g); enumerate the one-sided actions.
  auto finish_tensor = [&]() {
    std::vector<std::vector<int>> mt(mors, std::vector<int>(mors, 0));
    for (int f = 0; f < mors; ++f) {
      for (int g = 0; g < mors; ++g) {
        const int first = left[c.src(f)][g];
        const int second = right[c.tgt(g)][f];
        if (c.tgt(first) != c.src(second)) return;
        mt[f][g] = c.comp(second, first);
      }
    }
    if (bifunctor_failure(c, ot, mt)) return;
    emit_components(mt);
  };

  // Fill right[b][f] then left[a][g] for non-identity f, g.
  const std::size_t right_slots = static_cast<std::size_t>(n) * non_identity.size();
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == 2 * right_slots) {
      finish_tensor();
      return;
    }
    const bool is_right = k < right_slots;
    const std::size_t j = is_right ? k : k - right_slots;
    const int obj = static_cast<int>(j / non_identity.size());
    const int f = non_identity[j % non_identity.size()];
    auto& table = is_right ? right : left;
    const int s = is_right ? ot[c.src(f)][obj] : ot[obj][c.src(f)];
    const int t = is_right ? ot[c.tgt(f)][obj] : ot[obj][c.tgt(f)];
    auto functorial = [&]() {
      const auto& row = table[obj];
      for (int g : non_identity) {
        for (int e : non_identity) {
          if (c.tgt(e) != c.src(g) || row[g] < 0 || row[e] < 0) continue;
          const int ge = row[c.compose[g][e]];
          if (ge >= 0 && ge != c.comp(row[g], row[e])) return false;
        }
      }
      return true;
    };
    for (int h : c.hom(s, t)) {
      table[obj][f] = h;
      if (functorial()) self(self, k + 1);
    }
    table[obj][f] = -1;
  };

  while (true) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) ot[a][b] = cells[a * n + b];
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        right[b][c.identity[a]] = c.identity[ot[a][b]];
        left[a][c.identity[b]] = c.identity[ot[a][b]];
      }
    }
    for (int f : non_identity) {
      for (int a = 0; a < n; ++a) right[a][f] = left[a][f] = -1;
    }
    charge(1);
    if (non_identity.empty()) {
      finish_tensor();
    } else {
      fill(fill, 0);
    }
    std::size_t s = cells.size();
    while (s > 0 && ++cells[s - 1] == n) cells[--s] = 0;
    if (s == 0) break;
  }
  return out;
}

std::vector<SkewData> enumerate_skew_structures(const Carrier& carrier, const SweepOptions& options) {
  SweepOptions o = options;
  o.all_kappas = false;
  std::vector<SkewData> out;
  for (auto& d : enumerate_skew_candidates(carrier, o)) {
    if (check_axioms(d).all_pass()) out.push_back(std::move(d));
  }
  return out;
}

SweepSummary sweep(const Carrier& carrier, const SweepOptions& options) {
  SweepSummary s;
  for (const auto& d : enumerate_skew_candidates(carrier, options)) {
    ++s.candidates;
    const FinCategory& c = d.base;
    const bool trivial_kappa = d.kappa_or_identity() == c.identity[d.unit];
    const PentagonReport axioms = check_axioms(d);
    const PentagonReport pentagons = check_pentagons(d);
    const bool skew = axioms.all_pass() && trivial_kappa;
    if (skew) ++s.skew_monoidal;
    if (pentagons.all_pass()) ++s.pentagons_hold;
    if (skew && is_monoidal(d)) ++s.monoidal;
    if (pentagons.all_pass() != skew) ++s.equivalence_failures;
    if (pentagons.at("A5").pass && !trivial_kappa) ++s.a5_without_identity_kappa;
    if (trivial_kappa && (!pentagons.at("A8").pass || !pentagons.at("A9").pass)) ++s.a8_a9_failures;
    if (skew && c.comp(d.rho[d.unit], d.lambda[d.unit]) != c.identity[d.tensor(d.unit, d.unit)]) {
      ++s.non_split_unit;
    }
  }
  return s;
}

}  // namespace catalan
