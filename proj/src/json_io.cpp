#include "catalan/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(where, key), "missing field");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array");
  return j;
}

void check_version(const Json& j) {
  const Json& v = member(j, "schema_version", "");
  if (as_int(v, "schema_version") != kSchemaVersion) {
    throw SchemaError("schema_version", "unsupported version " + v.dump());
  }
}

void check_kind(const Json& j, const std::string& expected) {
  const std::string kind = as_string(member(j, "kind", ""), "kind");
  if (kind != expected) throw SchemaError("kind", "expected \"" + expected + "\", got \"" + kind + "\"");
}

/// Label -> index lookup with a field path in the error.
class Names {
 public:
  explicit Names(const std::vector<std::string>& labels, std::string what) : what_(std::move(what)) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!index_.emplace(labels[i], static_cast<int>(i)).second) {
        throw SchemaError(what_, "duplicate label \"" + labels[i] + "\"");
      }
    }
  }

  int at(const Json& j, const std::string& where) const {
    const std::string s = as_string(j, where);
    auto it = index_.find(s);
    if (it == index_.end()) throw SchemaError(where, "unknown " + what_ + " \"" + s + "\"");
    return it->second;
  }

  int size() const { return static_cast<int>(index_.size()); }

 private:
  std::string what_;
  std::map<std::string, int> index_;
};

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : as_array(j, where)) {
    out.push_back(as_string(v, where + "[" + std::to_string(i++) + "]"));
  }
  return out;
}

/// {"a": {"b": "c"}} over every pair of `names`, looked up in `values`.
std::vector<std::vector<int>> binary_table(const Json& j, const std::string& where,
                                           const std::vector<std::string>& names, const Names& keys,
                                           const Names& values) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (auto it = j.begin(); it != j.end(); ++it) keys.at(Json(it.key()), join(where, it.key()));
  for (int a = 0; a < n; ++a) {
    const std::string wa = join(where, names[a]);
    const Json& row = member(j, names[a], where);
    if (!row.is_object()) throw SchemaError(wa, "expected an object");
    for (auto it = row.begin(); it != row.end(); ++it) keys.at(Json(it.key()), join(wa, it.key()));
    for (int b = 0; b < n; ++b) out[a][b] = values.at(member(row, names[b], wa), join(wa, names[b]));
  }
  return out;
}

Json binary_table_json(const std::vector<std::vector<int>>& t, const std::vector<std::string>& keys,
                       const std::vector<std::string>& values) {
  Json j = Json::object();
  for (std::size_t a = 0; a < t.size(); ++a) {
    Json row = Json::object();
    for (std::size_t b = 0; b < t[a].size(); ++b) row[keys[b]] = values[t[a][b]];
    j[keys[a]] = row;
  }
  return j;
}

std::vector<std::string> morphism_labels(const FinCategory& c) {
  std::vector<std::string> out;
  for (const auto& m : c.morphisms) out.push_back(m.label);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col),
                      "invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json sset_to_json(const TruncatedSSet& s) {
  const SSetTables& t = s.tables();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sset";
  j["top"] = t.top;
  j["levels"] = t.levels;
  j["faces"] = t.faces;
  j["degeneracies"] = t.degeneracies;
  return j;
}

TruncatedSSet sset_from_json(const Json& j) {
  check_version(j);
  check_kind(j, "sset");
  SSetTables t;
  t.top = as_int(member(j, "top", ""), "top");
  try {
    t.levels = member(j, "levels", "").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("levels", "expected an array of arrays of strings");
  }
  try {
    t.faces = member(j, "faces", "").get<std::vector<std::vector<std::vector<int>>>>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("faces", "expected nested integer arrays");
  }
  try {
    t.degeneracies = member(j, "degeneracies", "").get<std::vector<std::vector<std::vector<int>>>>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("degeneracies", "expected nested integer arrays");
  }
  return TruncatedSSet(std::move(t));
}

Json category_to_json(const FinCategory& c) {
  Json j;
  j["objects"] = c.objects;
  Json mors = Json::array();
  for (const auto& m : c.morphisms) {
    mors.push_back(Json{{"label", m.label}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
  }
  j["morphisms"] = mors;
  Json ids = Json::object();
  for (int a = 0; a < c.object_count(); ++a) ids[c.objects[a]] = c.label(c.identity[a]);
  j["identities"] = ids;
  Json comp = Json::object();
  for (int g = 0; g < c.morphism_count(); ++g) {
    Json row = Json::object();
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.compose[g][f] != kUndefined) row[c.label(f)] = c.label(c.compose[g][f]);
    }
    comp[c.label(g)] = row;
  }
  j["compose"] = comp;
  return j;
}

FinCategory category_from_json(const Json& j, const std::string& where) {
  FinCategory c;
  c.objects = string_list(member(j, "objects", where), join(where, "objects"));
  const Names objs(c.objects, "object");
  const std::string wm = join(where, "morphisms");
  std::size_t i = 0;
  for (const auto& m : as_array(member(j, "morphisms", where), wm)) {
    const std::string wi = wm + "[" + std::to_string(i++) + "]";
    c.morphisms.push_back({as_string(member(m, "label", wi), join(wi, "label")),
                           objs.at(member(m, "src", wi), join(wi, "src")),
                           objs.at(member(m, "tgt", wi), join(wi, "tgt"))});
  }
  const auto labels = morphism_labels(c);
  const Names mors(labels, "morphism");

  const std::string wid = join(where, "identities");
  const Json& ids = member(j, "identities", where);
  for (const auto& o : c.objects) c.identity.push_back(mors.at(member(ids, o, wid), join(wid, o)));

  const std::string wc = join(where, "compose");
  const Json& comp = member(j, "compose", where);
  if (!comp.is_object()) throw SchemaError(wc, "expected an object");
  const int n = c.morphism_count();
  c.compose.assign(n, std::vector<int>(n, kUndefined));
  for (auto g = comp.begin(); g != comp.end(); ++g) {
    const std::string wg = join(wc, g.key());
    const int gi = mors.at(Json(g.key()), wg);
    if (!g.value().is_object()) throw SchemaError(wg, "expected an object");
    for (auto f = g.value().begin(); f != g.value().end(); ++f) {
      const std::string wf = join(wg, f.key());
      c.compose[gi][mors.at(Json(f.key()), wf)] = mors.at(f.value(), wf);
    }
  }
  return c;
}

Json structure_to_json(const FinMonoidalStructure& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "category";
  const Json block = category_to_json(m.base);
  for (auto it = block.begin(); it != block.end(); ++it) j[it.key()] = it.value();
  const auto labels = morphism_labels(m.base);
  j["tensor_objects"] = binary_table_json(m.obj_tensor, m.base.objects, m.base.objects);
  j["tensor_morphisms"] = binary_table_json(m.mor_tensor, labels, labels);
  j["unit"] = m.base.objects[m.unit];
  return j;
}

FinMonoidalStructure structure_from_json(const Json& j) {
  check_version(j);
  const std::string kind = as_string(member(j, "kind", ""), "kind");
  if (kind == "poset") {
    MonoidalPoset p;
    p.elements = string_list(member(j, "elements", ""), "elements");
    const Names els(p.elements, "element");
    const int n = p.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) p.leq[a][a] = true;
    std::size_t i = 0;
    for (const auto& pair : as_array(member(j, "leq", ""), "leq")) {
      const std::string w = "leq[" + std::to_string(i++) + "]";
      if (!pair.is_array() || pair.size() != 2) throw SchemaError(w, "expected a pair");
      p.leq[els.at(pair[0], w + "[0]")][els.at(pair[1], w + "[1]")] = true;
    }
    p.tensor = binary_table(member(j, "tensor", ""), "tensor", p.elements, els, els);
    p.unit = els.at(member(j, "unit", ""), "unit");
    if (const Report r = validate_monoidal_poset(p); !r.empty()) {
      throw SchemaError("", "not a monoidal poset: " + r.front().law + " (" + r.front().detail + ")");
    }
    return poset_as_category(p);
  }
  if (kind != "category") throw SchemaError("kind", "expected \"category\" or \"poset\"");
  FinMonoidalStructure m;
  m.base = category_from_json(j);
  const Names objs(m.base.objects, "object");
  const auto labels = morphism_labels(m.base);
  const Names mors(labels, "morphism");
  m.obj_tensor = binary_table(member(j, "tensor_objects", ""), "tensor_objects", m.base.objects, objs, objs);
  m.mor_tensor = binary_table(member(j, "tensor_morphisms", ""), "tensor_morphisms", labels, mors, mors);
  m.unit = objs.at(member(j, "unit", ""), "unit");
  return m;
}

Json skew_to_json(const SkewData& d) {
  const FinCategory& c = d.base;
  const auto labels = morphism_labels(c);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "skew";
  j["category"] = category_to_json(c);
  j["tensor_objects"] = binary_table_json(d.obj_tensor, c.objects, c.objects);
  j["tensor_morphisms"] = binary_table_json(d.mor_tensor, labels, labels);
  j["unit"] = c.objects[d.unit];
  Json alpha = Json::object();
  for (int a = 0; a < c.object_count(); ++a) {
    Json row = Json::object();
    for (int b = 0; b < c.object_count(); ++b) {
      Json cell = Json::object();
      for (int e = 0; e < c.object_count(); ++e) cell[c.objects[e]] = labels[d.alpha[a][b][e]];
      row[c.objects[b]] = cell;
    }
    alpha[c.objects[a]] = row;
  }
  j["alpha"] = alpha;
  Json lambda = Json::object(), rho = Json::object();
  for (int a = 0; a < c.object_count(); ++a) {
    lambda[c.objects[a]] = labels[d.lambda[a]];
    rho[c.objects[a]] = labels[d.rho[a]];
  }
  j["lambda"] = lambda;
  j["rho"] = rho;
  if (d.kappa) j["kappa"] = labels[*d.kappa];
  return j;
}

SkewData skew_from_json(const Json& j) {
  check_version(j);
  check_kind(j, "skew");
  SkewData d;
  d.base = category_from_json(member(j, "category", ""), "category");
  const FinCategory& c = d.base;
  const Names objs(c.objects, "object");
  const auto labels = morphism_labels(c);
  const Names mors(labels, "morphism");
  d.obj_tensor = binary_table(member(j, "tensor_objects", ""), "tensor_objects", c.objects, objs, objs);
  d.mor_tensor = binary_table(member(j, "tensor_morphisms", ""), "tensor_morphisms", labels, mors, mors);
  d.unit = objs.at(member(j, "unit", ""), "unit");
  const int n = c.object_count();
  const Json& alpha = member(j, "alpha", "");
  d.alpha.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int a = 0; a < n; ++a) {
    const std::string wa = join("alpha", c.objects[a]);
    const Json& row = member(alpha, c.objects[a], "alpha");
    for (int b = 0; b < n; ++b) {
      const std::string wb = join(wa, c.objects[b]);
      const Json& cell = member(row, c.objects[b], wa);
      for (int e = 0; e < n; ++e) {
        d.alpha[a][b][e] = mors.at(member(cell, c.objects[e], wb), join(wb, c.objects[e]));
      }
    }
  }
  const Json& lambda = member(j, "lambda", "");
  const Json& rho = member(j, "rho", "");
  for (int a = 0; a < n; ++a) {
    d.lambda.push_back(mors.at(member(lambda, c.objects[a], "lambda"), join("lambda", c.objects[a])));
    d.rho.push_back(mors.at(member(rho, c.objects[a], "rho"), join("rho", c.objects[a])));
  }
  if (auto it = j.find("kappa"); it != j.end()) d.kappa = mors.at(*it, "kappa");
  return d;
}

}  // namespace catalan
