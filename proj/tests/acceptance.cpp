// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/classifier.hpp"
#include "catalan/dyck.hpp"
#include "catalan/errors.hpp"
#include "catalan/motzkin.hpp"
#include "catalan/nerve.hpp"
#include "catalan/relation.hpp"
#include "catalan/skew.hpp"
#include "catalan/sset.hpp"

using namespace catalan;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Collects failures without stopping at the first one.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_++ < 3) note_ += (note_.empty() ? "" : "; ") + what;
    }
  }
  Outcome done(const std::string& summary) const {
    return {pass_, pass_ ? summary : note_ + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : "")};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string note_;
};

BigInt closed_form_catalan(int m) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= m; ++i) {
    num *= m + i;
    den *= i;
  }
  return num / den / (m + 1);
}

Outcome census() {
  Probe p;
  const std::vector<long> stated = {1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 8; ++n) {
    const auto count = static_cast<long>(enumerate_dyck(n).size());
    p.expect(count == stated[n], "|C_" + std::to_string(n) + "| = " + std::to_string(count));
    p.expect(closed_form_catalan(n + 1) == stated[n], "closed form at " + std::to_string(n));
  }
  return p.done("1 2 5 14 42 132 429 1430 4862");
}

Outcome low_dimension_tables() {
  Probe p;
  const TruncatedSSet s = catalan_sset(3);
  auto faces_of = [&](int n, const std::string& w) {
    std::vector<std::string> out;
    const int x = *s.find(n, w);
    for (int i = 0; i <= n; ++i) out.push_back(s.label(n - 1, s.face(n, i, x)));
    return out;
  };
  const std::string c = "UDUD", e = "UUDD";
  const std::string t = "UDUDUD", i = "UUDUDD", s0c = "UUDDUD", s1c = "UDUUDD", s0e = "UUUDDD";
  using V = std::vector<std::string>;
  p.expect(s.size(2) == 5, "five 2-simplices");
  p.expect(faces_of(2, t) == V{c, c, c}, "t");
  p.expect(faces_of(2, i) == V{e, c, e}, "i");
  p.expect(faces_of(2, s0c) == V{c, c, e}, "s0c");
  p.expect(faces_of(2, s1c) == V{e, c, c}, "s1c");
  p.expect(faces_of(2, s0e) == V{e, e, e}, "s0e");
  // non-degenerate 3-simplices and their face tuples
  std::map<V, std::string> nondeg;
  for (std::size_t x = 0; x < s.size(3); ++x) {
    if (!s.is_degenerate(3, x)) nondeg[faces_of(3, s.label(3, x))] = s.label(3, x);
  }
  p.expect(nondeg.size() == 4, "four non-degenerate 3-simplices");
  const std::map<std::string, V> printed = {{"a", {t, t, t, t}},
                                            {"l", {i, s1c, t, s1c}},
                                            {"r", {s0c, t, s0c, i}},
                                            {"k", {i, s1c, s0c, i}}};
  const CatalanSimplices named = catalan_simplices();
  const std::map<std::string, std::string> words = {
      {"a", named.a.str()}, {"l", named.l.str()}, {"r", named.r.str()}, {"k", named.k.str()}};
  for (const auto& [name, tuple] : printed) {
    const auto it = nondeg.find(tuple);
    p.expect(it != nondeg.end() && it->second == words.at(name), name + " face tuple");
  }
  return p.done("t=(c,c,c) i=(e,c,e); a, l, r, k as printed");
}

Outcome identities() {
  Probe p;
  const auto a = check_simplicial_identities(catalan_sset(8));
  p.expect(a.empty(), std::to_string(a.size()) + " violations on C up to 8");
  const auto b = check_simplicial_identities(monoidal_nerve(library::two_or(), 5));
  p.expect(b.empty(), std::to_string(b.size()) + " violations on N(2) up to 5");
  return p.done("0 violations (C to dim 8, N(2) to dim 5)");
}

Outcome coskeletality() {
  Probe p;
  const TruncatedSSet s = catalan_sset(6);
  std::size_t total = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto bs = boundaries(s, n);
    total += bs.size();
    for (const auto& b : bs) p.expect(fillers(s, b).size() == 1, "non-unique filler in dim " + std::to_string(n));
    p.expect(bs.size() == s.size(n), "boundary count in dim " + std::to_string(n));
  }
  for (int n = 3; n <= 4; ++n) {
    const auto naive = boundaries_naive(s, n);
    p.expect(naive == boundaries(s, n), "naive and skeletal differ in dim " + std::to_string(n));
    // count fillers by scanning the level, bypassing the facet index
    for (const auto& b : naive) {
      std::size_t hits = 0;
      for (std::size_t x = 0; x < s.size(n); ++x) hits += s.facet_tuple(n, x) == b;
      p.expect(hits == 1, "naive filler count in dim " + std::to_string(n));
    }
  }
  const int c = *s.find(1, "UDUD"), e = *s.find(1, "UUDD");
  p.expect(fillers(s, {c, e, c}).empty(), "(c,e,c) unexpectedly fillable");
  p.expect(!is_r_coskeletal_up_to(s, 1, 2), "C reported 1-coskeletal");
  return p.done(std::to_string(total) + " boundaries in dims 3-6 uniquely filled; not 1-coskeletal");
}

Outcome relation_model() {
  Probe p;
  for (int n = 0; n <= 7; ++n) {
    const auto words = enumerate_dyck(n);
    p.expect(enumerate_k_relations(n).size() == words.size(), "|K_" + std::to_string(n) + "|");
    for (const auto& w : words) {
      const EdgeRelation r = to_relation(w);
      p.expect(from_relation(r) == w, "round trip " + w.str());
      for (int i = 0; n > 0 && i <= n; ++i) p.expect(to_relation(face(w, i)) == relation_face(r, i), "face " + w.str());
      for (int i = 0; i <= n; ++i) {
        p.expect(to_relation(degeneracy(w, i)) == relation_degeneracy(r, i), "degeneracy " + w.str());
      }
    }
    for (const auto& r : enumerate_k_relations(n)) p.expect(to_relation(from_relation(r)) == r, "inverse");
  }
  return p.done("inverse and natural through dim 7; |K_n| = |C_n|");
}

Outcome motzkin() {
  Probe p;
  const std::vector<long> stated = {1, 1, 2, 4, 9, 21, 51};
  for (int n = 0; n <= 6; ++n) {
    long nondeg = 0;
    for (const auto& w : enumerate_dyck(n)) nondeg += !is_degenerate(w);
    p.expect(nondeg == stated[n], "non-degenerate count in dim " + std::to_string(n));
    p.expect(motzkin_number(n) == stated[n], "M_" + std::to_string(n));
  }
  for (int n = 0; n <= 7; ++n) {
    std::vector<MotzkinWord> images;
    for (const auto& w : enumerate_dyck(n)) {
      if (is_degenerate(w)) continue;
      images.push_back(dyck_to_motzkin(w));
      p.expect(motzkin_to_dyck(images.back()) == w, "round trip " + w.str());
    }
    std::sort(images.begin(), images.end());
    p.expect(images == enumerate_motzkin(n), "bijection in dim " + std::to_string(n));
  }
  for (int n = 0; n <= 12; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k) * motzkin_number(k);
    p.expect(sum == closed_form_catalan(n + 1), "binomial identity at " + std::to_string(n));
  }
  return p.done("1 1 2 4 9 21 51; bijective to n=7; identity to n=12");
}

Outcome nerve_isomorphism() {
  Probe p;
  const TruncatedSSet cat = catalan_sset(4);
  const TruncatedSSet nerve = monoidal_nerve(library::two_or(), 4);
  const auto isos = isomorphisms(cat, nerve);
  p.expect(isos.size() == 1, std::to_string(isos.size()) + " isomorphisms");
  if (isos.size() == 1) {
    const auto& f = isos.front();
    p.expect(is_simplicial_map(cat, nerve, f), "not simplicial");
    p.expect(nerve.label(1, f.components[1][*cat.find(1, "UDUD")]) == "top", "c not sent to top");
    p.expect(nerve.label(1, f.components[1][*cat.find(1, "UUDD")]) == "bot", "e not sent to bot");
  }
  return p.done("1 isomorphism; c -> top, e -> bot");
}

Outcome classification() {
  Probe p;
  // first three counts are stated; the last two were fixed on the first verified run
  const std::map<std::string, std::size_t> expected = {{"two-or", 2},     {"chain3-max", 3}, {"chain3-trunc-add", 2},
                                                       {"antichain2", 1}, {"one-object-1z", 1}};
  std::ostringstream counts;
  for (const auto& [name, m] : library::classification_library()) {
    const ClassificationSummary s = compare_classification(m);
    p.expect(s.agree, name + " disagrees");
    p.expect(s.records == expected.at(name) && s.engine_maps == s.records && s.monoids == s.records,
             name + " count " + std::to_string(s.records));
    p.expect(check_fk_automatic(m), name + " f(k) not automatic");
    counts << (counts.tellp() ? " " : "") << name << "=" << s.records;
  }
  return p.done(counts.str() + "; f(k) automatic");
}

Outcome skew_equivalence() {
  Probe p;
  std::size_t total = 0;
  for (const std::string name : {"chain2", "one-object-1z"}) {
    for (const auto& d : enumerate_skew_candidates(named_carrier(name))) {
      ++total;
      const PentagonReport pent = check_pentagons(d);
      const PentagonReport ax = check_axioms(d);
      const bool trivial = d.kappa_or_identity() == d.base.identity[d.unit];
      p.expect(pent.all_pass() == (ax.all_pass() && trivial), name + ": equivalence");
      p.expect(verify_equivalence(d), name + ": verify_equivalence");
      if (pent.at("A5").pass) p.expect(trivial, name + ": (A5) passes with kappa != 1");
      if (trivial && check_naturality(d).empty()) {
        p.expect(pent.at("A8").pass && pent.at("A9").pass, name + ": (A8)/(A9) fail with kappa = 1");
      }
    }
  }
  p.expect(total > 0, "no candidates");
  return p.done(std::to_string(total) + " candidates over chain2 and {1,z}, all kappas");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"census", 5, census},
      {"low-dimension tables", 1, low_dimension_tables},
      {"simplicial identities", 10, identities},
      {"2-coskeletality", 20, coskeletality},
      {"relation model", 10, relation_model},
      {"motzkin", 5, motzkin},
      {"nerve isomorphism", 5, nerve_isomorphism},
      {"classification", 10, classification},
      {"skew equivalence", 20, skew_equivalence},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.seconds) {
      o.pass = false;
      o.note += " (over the " + std::to_string(static_cast<int>(c.seconds)) + " s target)";
    }
    failed += !o.pass;
    std::printf("[%s] %d. %-22s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
