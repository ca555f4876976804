// Command-line front end. Exit status: 0 pass, 1 a check came out false,
// 2 bad input, 3 a cap or budget was exceeded.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catalan/classifier.hpp"
#include "catalan/dyck.hpp"
#include "catalan/errors.hpp"
#include "catalan/fin_monoidal.hpp"
#include "catalan/json_io.hpp"
#include "catalan/motzkin.hpp"
#include "catalan/nerve.hpp"
#include "catalan/relation.hpp"
#include "catalan/skew.hpp"
#include "catalan/sset.hpp"

using namespace catalan;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Caps {
  int dyck = 10;
  int relation = 7;
  int motzkin = 10;
  int sset = 9;
  int nerve = kMaxNerveDimension;
  int binomial = 60;
  std::size_t sweep_budget = 5'000'000;
};

void load_caps(const std::string& path, Caps& caps) {
  const Json j = read_json_file(path);
  if (!j.is_object()) throw SchemaError("", "config must be an object");
  auto it = j.find("caps");
  if (it == j.end()) return;
  if (!it->is_object()) throw SchemaError("caps", "expected an object");
  const std::map<std::string, int*> ints = {{"dyck", &caps.dyck},         {"relation", &caps.relation},
                                            {"motzkin", &caps.motzkin},   {"sset", &caps.sset},
                                            {"nerve", &caps.nerve},       {"binomial", &caps.binomial}};
  for (auto kv = it->begin(); kv != it->end(); ++kv) {
    const std::string field = "caps." + kv.key();
    if (!kv.value().is_number_integer() || kv.value().get<long long>() < 0) {
      throw SchemaError(field, "expected a non-negative integer");
    }
    if (kv.key() == "sweep_budget") {
      caps.sweep_budget = kv.value().get<std::size_t>();
    } else if (auto m = ints.find(kv.key()); m != ints.end()) {
      *m->second = kv.value().get<int>();
    } else {
      throw SchemaError(field, "unknown cap");
    }
  }
  // Hard ceilings of the underlying constructions.
  caps.nerve = std::min(caps.nerve, kMaxNerveDimension);
}

void require_cap(int value, int cap, const std::string& what) {
  if (value > cap) {
    throw BudgetError(what + " " + std::to_string(value) + " exceeds the cap of " + std::to_string(cap));
  }
}

void require_non_negative(int value, const std::string& what) {
  if (value < 0) throw PreconditionError(what + " must be non-negative");
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void suite_census(int max_dim, std::vector<Check>& out) {
  for (int n = 0; n <= max_dim; ++n) {
    const auto count = enumerate_dyck(n).size();
    const BigInt expected = catalan_number(n + 1);
    out.push_back({"census", "|C_" + std::to_string(n) + "| = Catalan(" + std::to_string(n + 1) + ")",
                   BigInt(count) == expected, std::to_string(count)});
  }
}

void suite_identities(int max_dim, int nerve_dim, std::vector<Check>& out) {
  const auto cat = check_simplicial_identities(catalan_sset(max_dim));
  out.push_back({"identities", "Catalan set up to dimension " + std::to_string(max_dim), cat.empty(),
                 std::to_string(cat.size()) + " violations"});
  const auto two = check_simplicial_identities(monoidal_nerve(library::two_or(), nerve_dim));
  out.push_back({"identities", "nerve of 2 up to dimension " + std::to_string(nerve_dim), two.empty(),
                 std::to_string(two.size()) + " violations"});
}

void suite_coskeletal(int r, int max_dim, std::vector<Check>& out) {
  const TruncatedSSet s = catalan_sset(max_dim);
  for (int n = r + 1; n <= max_dim; ++n) {
    const auto bs = boundaries(s, n);
    std::size_t unique = 0;
    for (const auto& b : bs) unique += fillers(s, b).size() == 1;
    out.push_back({"coskeletal", "unique fillers in dimension " + std::to_string(n), unique == bs.size(),
                   std::to_string(unique) + "/" + std::to_string(bs.size()) + " boundaries"});
  }
  for (int n = std::max(r + 1, 1); n <= std::min(max_dim, 4); ++n) {
    const bool same = boundaries(s, n) == boundaries_naive(s, n);
    out.push_back({"coskeletal", "skeletal = naive boundaries in dimension " + std::to_string(n), same,
                   ""});
  }
  if (max_dim >= 2) {
    const TruncatedSSet low = catalan_sset(2);
    const int c = *low.find(1, "UDUD");
    const int e = *low.find(1, "UUDD");
    const bool empty = fillers(low, {c, e, c}).empty();
    out.push_back({"coskeletal", "not 1-coskeletal: (c,e,c) has no filler", empty, ""});
  }
}

void suite_nerve_iso(int max_dim, std::vector<Check>& out) {
  const FinMonoidalStructure two = library::two_or();
  const TruncatedSSet cat = catalan_sset(max_dim);
  const TruncatedSSet nerve = monoidal_nerve(two, max_dim);
  const auto isos = isomorphisms(cat, nerve);
  out.push_back({"nerve-iso", "isomorphisms C -> N(2) up to dimension " + std::to_string(max_dim),
                 isos.size() == 1, std::to_string(isos.size()) + " isomorphism" + (isos.size() == 1 ? "" : "s") +
                 " found"});
  if (isos.size() == 1 && max_dim >= 1) {
    const auto& f = isos.front();
    const std::string c_image = nerve.label(1, f.components[1][*cat.find(1, "UDUD")]);
    const std::string e_image = nerve.label(1, f.components[1][*cat.find(1, "UUDD")]);
    out.push_back({"nerve-iso", "c -> top, e -> bot", c_image == "top" && e_image == "bot",
                   "c -> " + c_image + ", e -> " + e_image});
  }
}

void suite_motzkin(int max_n, std::vector<Check>& out) {
  for (int n = 0; n <= max_n; ++n) {
    std::vector<DyckWord> nondeg;
    for (const auto& w : enumerate_dyck(n)) {
      if (!is_degenerate(w)) nondeg.push_back(w);
    }
    const BigInt m = motzkin_number(n);
    out.push_back({"motzkin", "non-degenerate " + std::to_string(n) + "-simplices = M_" + std::to_string(n),
                   BigInt(nondeg.size()) == m, std::to_string(nondeg.size())});
    std::vector<MotzkinWord> images;
    bool inverse = true;
    for (const auto& w : nondeg) {
      images.push_back(dyck_to_motzkin(w));
      inverse = inverse && motzkin_to_dyck(images.back()) == w;
    }
    std::sort(images.begin(), images.end());
    const bool bijective = inverse && images == enumerate_motzkin(n);
    out.push_back({"motzkin", "round trip bijective for n = " + std::to_string(n), bijective, ""});
  }
}

void suite_binomial(int max_n, std::vector<Check>& out) {
  for (int n = 0; n <= max_n; ++n) {
    out.push_back({"binomial", "C_" + std::to_string(n + 1) + " = sum_k binom(" + std::to_string(n) + ",k) M_k",
                   verify_binomial_identity(n), catalan_number(n + 1).str()});
  }
}

void suite_relation(int max_dim, std::vector<Check>& out) {
  for (int n = 0; n <= max_dim; ++n) {
    const auto words = enumerate_dyck(n);
    bool round = true, natural = true;
    for (const auto& w : words) {
      const EdgeRelation r = to_relation(w);
      round = round && from_relation(r) == w;
      for (int i = 0; n > 0 && i <= n; ++i) natural = natural && to_relation(face(w, i)) == relation_face(r, i);
      for (int i = 0; i <= n; ++i) {
        natural = natural && to_relation(degeneracy(w, i)) == relation_degeneracy(r, i);
      }
    }
    const auto ks = enumerate_k_relations(n);
    out.push_back({"relation", "dimension " + std::to_string(n) + ": inverse, natural, |K_n| = |C_n|",
                   round && natural && ks.size() == words.size(),
                   "|K_n| = " + std::to_string(ks.size()) + ", round trip " + yes_no(round) + ", natural " +
                       yes_no(natural)});
  }
}

void suite_classification(std::vector<Check>& out) {
  for (const auto& [name, m] : library::classification_library()) {
    const ClassificationSummary s = compare_classification(m);
    out.push_back({"classification", name + ": maps = records = monoids", s.agree,
                   std::to_string(s.engine_maps) + " maps, " + std::to_string(s.records) + " records, " +
                       std::to_string(s.monoids) + " monoids"});
    out.push_back({"classification", name + ": f(k) automatic", check_fk_automatic(m), ""});
  }
}

void suite_skew(std::size_t budget, std::vector<Check>& out) {
  for (const std::string carrier : {"chain2", "one-object-1z"}) {
    SweepOptions o;
    o.budget = budget;
    const SweepSummary s = sweep(named_carrier(carrier), o);
    out.push_back({"skew", carrier + ": pentagons <=> axioms and kappa = 1", s.equivalence_failures == 0,
                   std::to_string(s.candidates) + " candidates"});
    out.push_back({"skew", carrier + ": (A5) forces kappa = 1", s.a5_without_identity_kappa == 0, ""});
    out.push_back({"skew", carrier + ": (A8), (A9) hold when kappa = 1", s.a8_a9_failures == 0, ""});
  }
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return arr;
}

// ---------------------------------------------------------------- output helpers

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string witness_text(const SkewData& d, const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + d.base.objects[w[i]];
  return s + ")";
}

Json report_json(const SkewData& d, const PentagonReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.conditions) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    Json w = Json::array();
    for (int x : c.witness) w.push_back(d.base.objects[x]);
    item["witness"] = w;
    arr.push_back(item);
  }
  return arr;
}

void print_report(std::ostream& os, const SkewData& d, const PentagonReport& r) {
  for (const auto& c : r.conditions) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) os << "  witness " << witness_text(d, c.witness);
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan simplicial set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string config;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--config", config, "JSON file with a \"caps\" object overriding size caps")
      ->check(CLI::ExistingFile);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List the simplices of one dimension");
  int en_dim = 0;
  bool en_nondeg = false;
  std::string en_as = "dyck";
  en->add_option("--dim", en_dim, "Dimension")->required();
  en->add_flag("--nondegenerate", en_nondeg, "Only non-degenerate simplices");
  en->add_option("--as", en_as, "dyck, relation or motzkin (motzkin implies --nondegenerate)")
      ->check(CLI::IsMember({"dyck", "relation", "motzkin"}));

  // face / degeneracy
  std::string fd_word;
  int fd_index = 0;
  auto* fc = app.add_subcommand("face", "Apply d_i to a Dyck word");
  fc->add_option("word", fd_word)->required();
  fc->add_option("index", fd_index)->required();
  auto* dg = app.add_subcommand("degeneracy", "Apply s_i to a Dyck word");
  dg->add_option("word", fd_word)->required();
  dg->add_option("index", fd_index)->required();

  // decompose
  auto* dc = app.add_subcommand("decompose", "Eilenberg-Zilber decomposition of a Dyck word");
  dc->add_option("word", fd_word)->required();

  // motzkin
  auto* mz = app.add_subcommand("motzkin", "Non-degenerate Dyck word <-> Motzkin word");
  bool mz_inverse = false;
  mz->add_option("word", fd_word, "Dyck word (or Motzkin word with --inverse; may be empty)")->required();
  mz->add_flag("--inverse", mz_inverse, "Read a Motzkin word and print its Dyck word");

  // verify
  auto* vf = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  int max_n = -1, max_dim = -1, r = 2;
  vf->add_option("--suite", suite)
      ->check(CLI::IsMember({"identities", "coskeletal", "nerve-iso", "motzkin", "binomial", "census",
                             "relation", "classification", "skew", "all"}));
  vf->add_option("--max-n", max_n, "Bound for the motzkin and binomial suites");
  vf->add_option("--max-dim", max_dim, "Bound for the dimension-indexed suites");
  vf->add_option("--r", r, "Coskeletality degree tested by the coskeletal suite");

  // classify
  auto* cl = app.add_subcommand("classify", "Maps from the Catalan set into a monoidal nerve");
  std::string structure_file;
  cl->add_option("file", structure_file, "Structure JSON")->required();

  // skew
  auto* sk = app.add_subcommand("skew", "Skew-monoidal checks");
  sk->require_subcommand(1);
  auto* skc = sk->add_subcommand("check", "Axioms and pentagons of one structure");
  std::string skew_file;
  skc->add_option("file", skew_file, "Skew JSON")->required();
  auto* sks = sk->add_subcommand("sweep", "Exhaustive sweep over a small carrier");
  std::string carrier;
  sks->add_option("--carrier", carrier)->required()->check(CLI::IsMember(carrier_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  std::ostream& os = std::cout;
  try {
    Caps caps;
    if (!config.empty()) load_caps(config, caps);

    if (*en) {
      require_non_negative(en_dim, "--dim");
      const bool nondeg = en_nondeg || en_as == "motzkin";
      require_cap(en_dim, en_as == "relation" ? caps.relation : en_as == "motzkin" ? caps.motzkin : caps.dyck,
                  "dimension");
      std::vector<std::string> items;
      for (const auto& w : enumerate_dyck(en_dim)) {
        if (nondeg && is_degenerate(w)) continue;
        if (en_as == "relation") {
          items.push_back(to_relation(w).to_string());
        } else if (en_as == "motzkin") {
          items.push_back(dyck_to_motzkin(w).str());
        } else {
          items.push_back(w.str());
        }
      }
      std::sort(items.begin(), items.end());
      if (as_json) {
        Json j = header("enumerate");
        j["dim"] = en_dim;
        j["as"] = en_as;
        j["nondegenerate"] = nondeg;
        j["items"] = items;
        j["count"] = items.size();
        os << j.dump(2) << "\n";
      } else {
        for (const auto& s : items) os << (s.empty() ? "(empty)" : s) << "\n";
        os << "count: " << items.size() << "\n";
      }
      return kExitPass;
    }

    if (*fc || *dg) {
      const DyckWord w(fd_word);
      const DyckWord out = *fc ? face(w, fd_index) : degeneracy(w, fd_index);
      if (as_json) {
        Json j = header(*fc ? "face" : "degeneracy");
        j["word"] = w.str();
        j["index"] = fd_index;
        j["result"] = out.str();
        j["dimension"] = out.dimension();
        os << j.dump(2) << "\n";
      } else {
        os << out.str() << "\n";
      }
      return kExitPass;
    }

    if (*dc) {
      const DyckWord w(fd_word);
      const auto [phi, base] = ez_decompose(w);
      if (as_json) {
        Json j = header("decompose");
        j["word"] = w.str();
        j["nondegenerate"] = base.str();
        j["surjection"] = phi.image();
        j["degenerate"] = !phi.is_identity();
        os << j.dump(2) << "\n";
      } else {
        os << "nondegenerate: " << base.str() << "\n";
        os << "surjection:";
        for (int v : phi.image()) os << " " << v;
        os << "\n";
      }
      return kExitPass;
    }

    if (*mz) {
      std::string from, to;
      if (mz_inverse) {
        const MotzkinWord m(fd_word);
        from = m.str();
        to = motzkin_to_dyck(m).str();
      } else {
        const DyckWord w(fd_word);
        from = w.str();
        to = dyck_to_motzkin(w).str();
      }
      if (as_json) {
        Json j = header("motzkin");
        j["input"] = from;
        j["output"] = to;
        os << j.dump(2) << "\n";
      } else {
        os << (to.empty() ? "(empty)" : to) << "\n";
      }
      return kExitPass;
    }

    if (*vf) {
      const bool all = suite == "all";
      auto want = [&](const char* s) { return all || suite == s; };
      auto dim_or = [&](int dflt, int cap) {
        const int d = max_dim < 0 ? dflt : max_dim;
        require_cap(d, cap, "--max-dim");
        return d;
      };
      std::vector<Check> checks;
      if (want("census")) suite_census(dim_or(8, caps.dyck), checks);
      if (want("identities")) {
        const int d = dim_or(8, caps.sset);
        suite_identities(d, std::min(d, std::min(5, caps.nerve)), checks);
      }
      if (want("coskeletal")) {
        require_non_negative(r, "--r");
        suite_coskeletal(r, dim_or(6, caps.sset), checks);
      }
      if (want("nerve-iso")) suite_nerve_iso(dim_or(4, caps.nerve), checks);
      if (want("relation")) suite_relation(dim_or(7, caps.relation), checks);
      if (want("motzkin")) {
        const int n = max_n < 0 ? 7 : max_n;
        require_cap(n, caps.motzkin, "--max-n");
        suite_motzkin(n, checks);
      }
      if (want("binomial")) {
        const int n = max_n < 0 ? 12 : max_n;
        require_cap(n, caps.binomial, "--max-n");
        suite_binomial(n, checks);
      }
      if (want("classification")) suite_classification(checks);
      if (want("skew")) suite_skew(caps.sweep_budget, checks);

      const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
      if (as_json) {
        Json j = header("verify");
        j["suite"] = suite;
        j["checks"] = checks_json(checks);
        j["pass"] = pass;
        os << j.dump(2) << "\n";
      } else {
        for (const auto& c : checks) {
          os << (c.pass ? "PASS " : "FAIL ") << "[" << c.suite << "] " << c.name;
          if (!c.detail.empty()) os << ": " << c.detail;
          os << "\n";
        }
        const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
        os << passed << "/" << checks.size() << " checks passed\n";
      }
      return pass ? kExitPass : kExitFalse;
    }

    if (*cl) {
      const FinMonoidalStructure m = structure_from_json(read_json_file(structure_file));
      if (const Report rep = validate_strict_monoidal(m); !rep.empty()) {
        throw StructuralError("not a strict monoidal category: " + rep.front().law + " (" +
                              rep.front().detail + ")");
      }
      const auto records = classify_maps(m);
      const ClassificationSummary s = compare_classification(m);
      const FinCategory& c = m.base;
      if (as_json) {
        Json j = header("classify");
        Json arr = Json::array();
        for (const auto& rec : records) {
          arr.push_back(Json{{"object", c.objects[rec.monoid.carrier]},
                             {"mu", c.label(rec.monoid.mu)},
                             {"eta", c.label(rec.monoid.eta)}});
        }
        j["records"] = arr;
        j["engine_maps"] = s.engine_maps;
        j["monoids"] = s.monoids;
        j["agree"] = s.agree;
        os << j.dump(2) << "\n";
      } else {
        for (const auto& rec : records) {
          os << "A = " << c.objects[rec.monoid.carrier] << ", mu = " << c.label(rec.monoid.mu)
             << ", eta = " << c.label(rec.monoid.eta) << "\n";
        }
        os << records.size() << " records, " << s.engine_maps << " simplicial maps, " << s.monoids
           << " monoids; agreement: " << (s.agree ? "true" : "false") << "\n";
      }
      return s.agree ? kExitPass : kExitFalse;
    }

    if (*skc) {
      const SkewData d = skew_from_json(read_json_file(skew_file));
      const Report nat = check_naturality(d);
      const PentagonReport axioms = check_axioms(d);
      const PentagonReport pentagons = check_pentagons(d);
      const bool equivalent = verify_equivalence(d);
      const bool pass = nat.empty() && axioms.all_pass() && pentagons.all_pass();
      if (as_json) {
        Json j = header("skew check");
        Json n = Json::array();
        for (const auto& v : nat) n.push_back(Json{{"law", v.law}, {"detail", v.detail}});
        j["naturality"] = n;
        j["axioms"] = report_json(d, axioms);
        j["pentagons"] = report_json(d, pentagons);
        j["kappa_identity"] = d.kappa_or_identity() == d.base.identity[d.unit];
        j["equivalence"] = equivalent;
        j["pass"] = pass;
        os << j.dump(2) << "\n";
      } else {
        os << "naturality: " << (nat.empty() ? "pass" : "FAIL") << "\n";
        for (const auto& v : nat) os << "  " << v.law << " at " << v.detail << "\n";
        print_report(os, d, axioms);
        print_report(os, d, pentagons);
        os << "equivalence: " << (equivalent ? "true" : "false") << "\n";
      }
      return pass ? kExitPass : kExitFalse;
    }

    if (*sks) {
      SweepOptions o;
      o.budget = caps.sweep_budget;
      const SweepSummary s = sweep(named_carrier(carrier), o);
      const bool pass = s.equivalence_failures == 0 && s.a5_without_identity_kappa == 0 && s.a8_a9_failures == 0;
      if (as_json) {
        Json j = header("skew sweep");
        j["carrier"] = carrier;
        j["candidates"] = s.candidates;
        j["skew_monoidal"] = s.skew_monoidal;
        j["pentagons_hold"] = s.pentagons_hold;
        j["monoidal"] = s.monoidal;
        j["equivalence_failures"] = s.equivalence_failures;
        j["a5_without_identity_kappa"] = s.a5_without_identity_kappa;
        j["a8_a9_failures"] = s.a8_a9_failures;
        j["non_split_unit"] = s.non_split_unit;
        j["equivalence"] = pass;
        os << j.dump(2) << "\n";
      } else {
        os << "carrier: " << carrier << "\n"
           << "candidates: " << s.candidates << "\n"
           << "skew-monoidal: " << s.skew_monoidal << "\n"
           << "pentagons hold: " << s.pentagons_hold << "\n"
           << "monoidal: " << s.monoidal << "\n"
           << "rho_I lambda_I != 1: " << s.non_split_unit << "\n"
           << "equivalence holds for all candidates: " << (pass ? "true" : "false") << "\n";
      }
      return pass ? kExitPass : kExitFalse;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
