#include "catalan/classifier.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "catalan/errors.hpp"
#include "catalan/nerve.hpp"

namespace catalan {

namespace {

DyckWord find_by_faces(const std::vector<DyckWord>& level, const std::array<DyckWord, 4>& faces) {
  std::vector<DyckWord> hits;
  for (const auto& w : level) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) ok = face(w, i) == faces[i];
    if (ok) hits.push_back(w);
  }
  if (hits.size() != 1) throw StructuralError("3-simplex facet tuple not realised exactly once");
  return hits.front();
}

/// Images of the Catalan 2-simplices under the candidate (A, mu, eta').
struct Candidate {
  int carrier;
  int mu;
  int eta_prime;
};

class CandidateImages {
 public:
  CandidateImages(const FinMonoidalStructure& m, const CatalanSimplices& names)
      : m_(m), names_(names) {}

  NerveTriangle image(const DyckWord& w, const Candidate& x) const {
    const FinCategory& c = m_.base;
    const int a = x.carrier;
    const int unit = m_.unit;
    if (w == names_.t) return {a, a, a, x.mu};
    if (w == names_.i) return {unit, a, unit, x.eta_prime};
    if (w == names_.s0c) return {a, a, unit, c.identity[a]};
    if (w == names_.s1c) return {unit, a, a, c.identity[a]};
    if (w == names_.s0e) return {unit, unit, unit, c.identity[unit]};
    throw PreconditionError("no image assigned to " + w.str());
  }

  bool fills(const DyckWord& tet, const Candidate& x) const {
    return tetrahedron_commutes(m_, image(face(tet, 0), x), image(face(tet, 1), x),
                                image(face(tet, 2), x), image(face(tet, 3), x));
  }

 private:
  const FinMonoidalStructure& m_;
  const CatalanSimplices& names_;
};

std::vector<Candidate> candidates(const FinMonoidalStructure& m) {
  const FinCategory& c = m.base;
  std::vector<Candidate> out;
  for (int a = 0; a < c.object_count(); ++a) {
    for (int mu : c.hom(m.tensor(a, a), a)) {
      for (int eta : c.hom(m.tensor(m.unit, m.unit), a)) out.push_back({a, mu, eta});
    }
  }
  return out;
}

using Triple = std::tuple<int, int, int>;

}  // namespace

CatalanSimplices catalan_simplices() {
  const DyckWord star;
  const DyckWord e = degeneracy(star, 0);
  const DyckWord c("UDUD");
  const DyckWord t("UDUDUD");
  const DyckWord i("UUDUDD");
  const DyckWord s0c = degeneracy(c, 0);
  const DyckWord s1c = degeneracy(c, 1);
  const auto level3 = enumerate_dyck(3);
  return {
      star, e, c, degeneracy(e, 0), s0c, s1c, t, i,
      find_by_faces(level3, {t, t, t, t}),
      find_by_faces(level3, {i, s1c, t, s1c}),
      find_by_faces(level3, {s0c, t, s0c, i}),
      find_by_faces(level3, {i, s1c, s0c, i}),
  };
}

std::vector<ClassificationRecord> classify_maps(const FinMonoidalStructure& m) {
  const CatalanSimplices names = catalan_simplices();
  const TruncatedSSet cat = catalan_sset(kClassificationDimension);
  const TruncatedSSet nerve = monoidal_nerve(m, kClassificationDimension);
  const CandidateImages images(m, names);
  const int c_id = *cat.find(1, names.c.str());
  const int t_id = *cat.find(2, names.t.str());
  const int i_id = *cat.find(2, names.i.str());

  std::vector<ClassificationRecord> out;
  for (const Candidate& x : candidates(m)) {
    const bool ok = images.fills(names.a, x) && images.fills(names.l, x) &&
                    images.fills(names.r, x) && images.fills(names.k, x);
    if (!ok) continue;
    MapSearchOptions options;
    options.fixed[{1, c_id}] = x.carrier;
    options.fixed[{2, t_id}] = *nerve.find(2, triangle_label(m, images.image(names.t, x)));
    options.fixed[{2, i_id}] = *nerve.find(2, triangle_label(m, images.image(names.i, x)));
    auto maps = enumerate_maps(cat, nerve, options);
    if (maps.size() != 1) {
      throw StructuralError("classification data did not extend to a unique simplicial map");
    }
    out.push_back({std::move(maps.front()), MonoidObject{x.carrier, x.mu, x.eta_prime}, x.eta_prime});
  }
  return out;
}

ClassificationSummary compare_classification(const FinMonoidalStructure& m) {
  ClassificationSummary s;
  const auto records = classify_maps(m);
  const TruncatedSSet cat = catalan_sset(kClassificationDimension);
  const TruncatedSSet nerve = monoidal_nerve(m, kClassificationDimension);
  const auto maps = simplicial_maps(cat, nerve, 3);
  const auto monoids = enumerate_monoids(m);
  s.records = records.size();
  s.engine_maps = maps.size();
  s.monoids = monoids.size();

  const CatalanSimplices names = catalan_simplices();
  const int c_id = *cat.find(1, names.c.str());
  const int t_id = *cat.find(2, names.t.str());
  const int i_id = *cat.find(2, names.i.str());

  std::vector<Triple> from_records;
  std::vector<Triple> from_maps;
  std::vector<Triple> from_monoids;
  bool maps_match = true;
  for (const auto& r : records) {
    from_records.emplace_back(r.monoid.carrier, r.monoid.mu, r.eta_prime);
    maps_match = maps_match && std::binary_search(maps.begin(), maps.end(), r.map);
  }
  for (const auto& f : maps) {
    const NerveTriangle mu = nerve_triangle(m, nerve, f.components[2][t_id]);
    const NerveTriangle eta = nerve_triangle(m, nerve, f.components[2][i_id]);
    from_maps.emplace_back(f.components[1][c_id], mu.mor, eta.mor);
  }
  for (const auto& x : monoids) from_monoids.emplace_back(x.carrier, x.mu, x.eta);
  std::sort(from_records.begin(), from_records.end());
  std::sort(from_maps.begin(), from_maps.end());
  std::sort(from_monoids.begin(), from_monoids.end());
  s.agree = maps_match && from_records == from_maps && from_maps == from_monoids;
  return s;
}

bool verify_classification(const FinMonoidalStructure& m) { return compare_classification(m).agree; }

bool check_fk_automatic(const FinMonoidalStructure& m) {
  if (const Report r = validate_strict_monoidal(m); !r.empty()) {
    throw StructuralError("not a strict monoidal structure: " + r.front().law);
  }
  const CatalanSimplices names = catalan_simplices();
  const CandidateImages images(m, names);
  for (const Candidate& x : candidates(m)) {
    if (!images.fills(names.k, x)) return false;
  }
  return true;
}

}  // namespace catalan
