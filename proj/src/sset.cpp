#include "catalan/sset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "catalan/dyck.hpp"
#include "catalan/errors.hpp"

namespace catalan {

namespace {

std::string where(int n, int i) {
  return "level " + std::to_string(n) + ", index " + std::to_string(i);
}

void check_table(const std::vector<int>& table, std::size_t domain, std::size_t codomain,
                 const std::string& what) {
  if (table.size() != domain) throw StructuralError(what + ": wrong table length");
  for (int v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= codomain) {
      throw StructuralError(what + ": entry " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

TruncatedSSet::TruncatedSSet(SSetTables tables) : t_(std::move(tables)) {
  const int top = t_.top;
  if (top < 0) throw StructuralError("negative truncation dimension");
  if (static_cast<int>(t_.levels.size()) != top + 1 ||
      static_cast<int>(t_.faces.size()) != top + 1 ||
      static_cast<int>(t_.degeneracies.size()) != top + 1) {
    throw StructuralError("table count does not match truncation dimension");
  }
  index_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    for (int x = 0; x < static_cast<int>(t_.levels[n].size()); ++x) {
      if (!index_[n].emplace(t_.levels[n][x], x).second) {
        throw StructuralError("duplicate label '" + t_.levels[n][x] + "' in level " +
                              std::to_string(n));
      }
    }
    const std::size_t faces_expected = n == 0 ? 0 : n + 1;
    const std::size_t degens_expected = n == top ? 0 : n + 1;
    if (t_.faces[n].size() != faces_expected || t_.degeneracies[n].size() != degens_expected) {
      throw StructuralError("wrong number of face/degeneracy maps at level " + std::to_string(n));
    }
    for (std::size_t i = 0; i < faces_expected; ++i) {
      check_table(t_.faces[n][i], t_.levels[n].size(), t_.levels[n - 1].size(), "face " + where(n, i));
    }
    for (std::size_t i = 0; i < degens_expected; ++i) {
      check_table(t_.degeneracies[n][i], t_.levels[n].size(), t_.levels[n + 1].size(),
                  "degeneracy " + where(n, i));
    }
  }
  degenerate_reps_.resize(top + 1);
  by_facets_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    degenerate_reps_[n].resize(t_.levels[n].size());
    if (n > 0) {
      for (int i = 0; i < n; ++i) {
        for (int y = 0; y < static_cast<int>(t_.levels[n - 1].size()); ++y) {
          degenerate_reps_[n][t_.degeneracies[n - 1][i][y]].emplace_back(i, y);
        }
      }
      for (int x = 0; x < static_cast<int>(t_.levels[n].size()); ++x) {
        by_facets_[n][facet_tuple(n, x)].push_back(x);
      }
    }
  }
}

std::optional<int> TruncatedSSet::find(int n, const std::string& label) const {
  if (n < 0 || n > top()) return std::nullopt;
  auto it = index_[n].find(label);
  if (it == index_[n].end()) return std::nullopt;
  return it->second;
}

std::vector<int> TruncatedSSet::facet_tuple(int n, int x) const {
  std::vector<int> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = t_.faces[n][i][x];
  return out;
}

const std::vector<int>& TruncatedSSet::fillers_of(int n, const std::vector<int>& facets) const {
  static const std::vector<int> none;
  auto it = by_facets_.at(n).find(facets);
  return it == by_facets_[n].end() ? none : it->second;
}

TruncatedSSet TruncatedSSet::truncate(int new_top) const {
  if (new_top < 0 || new_top > top()) throw PreconditionError("cannot truncate above the top");
  SSetTables t;
  t.top = new_top;
  t.levels.assign(t_.levels.begin(), t_.levels.begin() + new_top + 1);
  t.faces.assign(t_.faces.begin(), t_.faces.begin() + new_top + 1);
  t.degeneracies.assign(t_.degeneracies.begin(), t_.degeneracies.begin() + new_top + 1);
  t.degeneracies[new_top].clear();
  return TruncatedSSet(std::move(t));
}

TruncatedSSet catalan_sset(int top) {
  if (top < 0) throw PreconditionError("truncation dimension must be non-negative");
  SSetTables t;
  t.top = top;
  std::vector<std::vector<DyckWord>> words;
  std::vector<std::unordered_map<std::string, int>> index(top + 1);
  for (int n = 0; n <= top; ++n) {
    words.push_back(enumerate_dyck(n));
    auto& labels = t.levels.emplace_back();
    for (const auto& w : words[n]) {
      index[n].emplace(w.str(), static_cast<int>(labels.size()));
      labels.push_back(w.str());
    }
  }
  t.faces.resize(top + 1);
  t.degeneracies.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0) {
      for (int i = 0; i <= n; ++i) {
        auto& table = t.faces[n].emplace_back();
        for (const auto& w : words[n]) table.push_back(index[n - 1].at(face(w, i).str()));
      }
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) {
        auto& table = t.degeneracies[n].emplace_back();
        for (const auto& w : words[n]) table.push_back(index[n + 1].at(degeneracy(w, i).str()));
      }
    }
  }
  return TruncatedSSet(std::move(t));
}

TruncatedSSet point_sset(int top) {
  if (top < 0) throw PreconditionError("truncation dimension must be non-negative");
  SSetTables t;
  t.top = top;
  t.faces.resize(top + 1);
  t.degeneracies.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    t.levels.push_back({"*" + std::to_string(n)});
    if (n > 0) t.faces[n].assign(n + 1, std::vector<int>{0});
    if (n < top) t.degeneracies[n].assign(n + 1, std::vector<int>{0});
  }
  return TruncatedSSet(std::move(t));
}

std::vector<IdentityViolation> check_simplicial_identities(const TruncatedSSet& s) {
  std::vector<IdentityViolation> out;
  const int top = s.top();
  auto report = [&](const char* name, int n, int i, int j, int x) {
    out.push_back({name, n, i, j, s.label(n, x)});
  };
  for (int n = 0; n <= top; ++n) {
    const int count = static_cast<int>(s.size(n));
    for (int x = 0; x < count; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j.
      if (n >= 2) {
        for (int j = 1; j <= n; ++j) {
          for (int i = 0; i < j; ++i) {
            if (s.face(n - 1, i, s.face(n, j, x)) != s.face(n - 1, j - 1, s.face(n, i, x))) {
              report("d_i d_j", n, i, j, x);
            }
          }
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j.
      if (n + 2 <= top) {
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i <= j; ++i) {
            if (s.degeneracy(n + 1, i, s.degeneracy(n, j, x)) !=
                s.degeneracy(n + 1, j + 1, s.degeneracy(n, i, x))) {
              report("s_i s_j", n, i, j, x);
            }
          }
        }
      }
      // d_i s_j.
      if (n + 1 <= top) {
        for (int j = 0; j <= n; ++j) {
          const int sx = s.degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            const int lhs = s.face(n + 1, i, sx);
            int rhs = 0;
            if (i < j) {
              rhs = s.degeneracy(n - 1, j - 1, s.face(n, i, x));
            } else if (i == j || i == j + 1) {
              rhs = x;
            } else {
              rhs = s.degeneracy(n - 1, j, s.face(n, i - 1, x));
            }
            if (lhs != rhs) report("d_i s_j", n, i, j, x);
          }
        }
      }
    }
  }
  return out;
}

std::vector<Boundary> boundaries(const TruncatedSSet& s, int n, std::size_t budget) {
  if (n < 1 || n > s.top() + 1) {
    throw PreconditionError("boundaries need 1 <= n <= top + 1");
  }
  if (n > 30) throw BudgetError("boundary dimension too large");
  // Proper non-empty faces of the standard n-simplex, as vertex bitmasks. Plain
  // integer order lists every face after all of its own faces.
  const std::uint32_t full = (std::uint32_t{1} << (n + 1)) - 1;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t mask = 1; mask < full; ++mask) faces.push_back(mask);
  std::vector<int> slot(full + 1, -1);
  for (std::size_t k = 0; k < faces.size(); ++k) slot[faces[k]] = static_cast<int>(k);

  std::vector<int> assigned(faces.size(), -1);
  std::vector<Boundary> out;
  std::vector<int> key;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == faces.size()) {
      Boundary b(n + 1);
      for (int i = 0; i <= n; ++i) b[i] = assigned[slot[full & ~(std::uint32_t{1} << i)]];
      out.push_back(std::move(b));
      if (out.size() > budget) throw BudgetError("boundary enumeration exceeded its budget");
      return;
    }
    const std::uint32_t mask = faces[k];
    const int dim = std::popcount(mask) - 1;
    if (dim == 0) {
      for (int v = 0; v < static_cast<int>(s.size(0)); ++v) {
        assigned[k] = v;
        self(self, k + 1);
      }
      return;
    }
    key.assign(dim + 1, 0);
    int pos = 0;
    for (int v = 0; v <= n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (mask & bit) key[pos++] = assigned[slot[mask & ~bit]];
    }
    const auto candidates = s.fillers_of(dim, key);
    for (int c : candidates) {
      assigned[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Boundary> boundaries_naive(const TruncatedSSet& s, int n) {
  if (n < 1 || n > s.top() + 1) {
    throw PreconditionError("boundaries need 1 <= n <= top + 1");
  }
  const int count = static_cast<int>(s.size(n - 1));
  std::vector<Boundary> out;
  Boundary b(n + 1);
  // Facet tuples in lexicographic order; a prefix is discarded as soon as two of
  // its members disagree on a shared face.
  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == n + 1) {
      out.push_back(b);
      return;
    }
    for (int x = 0; x < count; ++x) {
      b[placed] = x;
      bool ok = true;
      if (n >= 2 && placed >= 1) {
        const int j = placed - 1;
        for (int i = 0; i <= j && ok; ++i) {
          ok = s.face(n - 1, j, b[i]) == s.face(n - 1, i, b[j + 1]);
        }
      }
      if (ok) self(self, placed + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> fillers(const TruncatedSSet& s, const Boundary& b) {
  const int n = static_cast<int>(b.size()) - 1;
  if (n < 1 || n > s.top()) throw PreconditionError("no simplices of that dimension");
  return s.fillers_of(n, b);
}

bool is_r_coskeletal_up_to(const TruncatedSSet& s, int r, int maxdim) {
  if (r < 0 || maxdim > s.top()) {
    throw PreconditionError("coskeletality check needs 0 <= r and maxdim <= top");
  }
  for (int n = r + 1; n <= maxdim; ++n) {
    for (const auto& b : boundaries(s, n)) {
      if (s.fillers_of(n, b).size() != 1) return false;
    }
  }
  return true;
}

TruncatedSSet coskeletal_extension(const TruncatedSSet& s, int top, std::size_t budget) {
  if (top <= s.top()) return s.truncate(std::max(top, 0));
  SSetTables t = s.tables();
  std::size_t total = 0;
  for (const auto& level : t.levels) total += level.size();
  for (int n = s.top() + 1; n <= top; ++n) {
    const TruncatedSSet current(t);
    auto bs = boundaries(current, n, budget);
    total += bs.size();
    if (total > budget) {
      throw BudgetError("coskeletal extension exceeds " + std::to_string(budget) + " simplices");
    }
    auto& labels = t.levels.emplace_back();
    for (const auto& b : bs) {
      std::ostringstream os;
      os << '<';
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << '>';
      labels.push_back(os.str());
    }
    auto& face_tables = t.faces.emplace_back(n + 1, std::vector<int>(bs.size()));
    for (std::size_t x = 0; x < bs.size(); ++x) {
      for (int i = 0; i <= n; ++i) face_tables[i][x] = bs[x][i];
    }
    // s_i x for x in level n-1 is the boundary prescribed by d_j s_i.
    auto& degens = t.degeneracies[n - 1];
    degens.assign(n, std::vector<int>(current.size(n - 1)));
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < static_cast<int>(current.size(n - 1)); ++x) {
        Boundary b(n + 1);
        for (int j = 0; j <= n; ++j) {
          if (j < i) {
            b[j] = current.degeneracy(n - 2, i - 1, current.face(n - 1, j, x));
          } else if (j == i || j == i + 1) {
            b[j] = x;
          } else {
            b[j] = current.degeneracy(n - 2, i, current.face(n - 1, j - 1, x));
          }
        }
        auto it = std::lower_bound(bs.begin(), bs.end(), b);
        if (it == bs.end() || *it != b) {
          throw StructuralError("degenerate boundary missing at level " + std::to_string(n) +
                                "; the truncation violates the simplicial identities");
        }
        degens[i][x] = static_cast<int>(it - bs.begin());
      }
    }
    t.degeneracies.emplace_back();
    t.top = n;
  }
  return TruncatedSSet(std::move(t));
}

bool is_simplicial_map(const TruncatedSSet& source, const TruncatedSSet& target,
                       const SimplicialMap& f) {
  const int top = std::min(source.top(), target.top());
  if (static_cast<int>(f.components.size()) != top + 1) return false;
  for (int n = 0; n <= top; ++n) {
    if (f.components[n].size() != source.size(n)) return false;
    for (int v : f.components[n]) {
      if (v < 0 || static_cast<std::size_t>(v) >= target.size(n)) return false;
    }
  }
  for (int n = 0; n <= top; ++n) {
    for (int x = 0; x < static_cast<int>(source.size(n)); ++x) {
      const int fx = f.components[n][x];
      for (int i = 0; n > 0 && i <= n; ++i) {
        if (target.face(n, i, fx) != f.components[n - 1][source.face(n, i, x)]) return false;
      }
      for (int i = 0; n < top && i <= n; ++i) {
        if (target.degeneracy(n, i, fx) != f.components[n + 1][source.degeneracy(n, i, x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<SimplicialMap> enumerate_maps(const TruncatedSSet& source,
                                          const TruncatedSSet& target,
                                          const MapSearchOptions& options) {
  const int top = std::min(source.top(), target.top());
  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= top; ++n) {
    for (int x = 0; x < static_cast<int>(source.size(n)); ++x) order.emplace_back(n, x);
  }
  SimplicialMap f;
  for (int n = 0; n <= top; ++n) f.components.emplace_back(source.size(n), -1);
  std::vector<std::vector<bool>> used;
  if (options.injective) {
    for (int n = 0; n <= top; ++n) used.emplace_back(target.size(n), false);
  }
  std::vector<SimplicialMap> out;

  auto faces_agree = [&](int n, int x, int y) {
    for (int i = 0; n > 0 && i <= n; ++i) {
      if (target.face(n, i, y) != f.components[n - 1][source.face(n, i, x)]) return false;
    }
    return true;
  };
  auto admissible = [&](int n, int x, int y) {
    if (auto it = options.fixed.find({n, x}); it != options.fixed.end() && it->second != y) {
      return false;
    }
    if (options.injective && used[n][y]) return false;
    return faces_agree(n, x, y);
  };

  std::vector<int> key;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(f);
      if (out.size() > options.budget) throw BudgetError("map enumeration exceeded its budget");
      return;
    }
    const auto [n, x] = order[k];
    std::vector<int> candidates;
    const auto& reps = source.degenerate_reps(n, x);
    if (!reps.empty()) {
      // Forced by s_i y = x; every representation must agree.
      const int image = target.degeneracy(n - 1, reps[0].first, f.components[n - 1][reps[0].second]);
      for (auto [i, y] : reps) {
        if (target.degeneracy(n - 1, i, f.components[n - 1][y]) != image) return;
      }
      candidates.push_back(image);
    } else if (n == 0) {
      for (int y = 0; y < static_cast<int>(target.size(0)); ++y) candidates.push_back(y);
    } else {
      key.resize(n + 1);
      for (int i = 0; i <= n; ++i) key[i] = f.components[n - 1][source.face(n, i, x)];
      candidates = target.fillers_of(n, key);
    }
    for (int y : candidates) {
      if (!admissible(n, x, y)) continue;
      f.components[n][x] = y;
      if (options.injective) used[n][y] = true;
      self(self, k + 1);
      if (options.injective) used[n][y] = false;
      f.components[n][x] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplicialMap> isomorphisms(const TruncatedSSet& source, const TruncatedSSet& target) {
  if (source.top() != target.top()) {
    throw PreconditionError("isomorphism search needs equal truncation dimensions");
  }
  for (int n = 0; n <= source.top(); ++n) {
    if (source.size(n) != target.size(n)) return {};
  }
  MapSearchOptions options;
  options.injective = true;
  return enumerate_maps(source, target, options);
}

std::vector<SimplicialMap> simplicial_maps(const TruncatedSSet& source,
                                           const TruncatedSSet& target, int k) {
  if (k < 0) throw PreconditionError("determination bound must be non-negative");
  if (source.top() < k + 1) {
    throw PreconditionError("source must be truncated at dimension >= k + 1");
  }
  if (k < target.top() && !is_r_coskeletal_up_to(target, k, target.top())) {
    throw PreconditionError("target is not " + std::to_string(k) +
                            "-coskeletal within its truncation");
  }
  return enumerate_maps(source, target);
}

}  // namespace catalan
