#pragma once

#include <optional>
#include <string>
#include <vector>

namespace catalan {

/// One broken law instance. `law` is a short stable tag, `detail` names the
/// offending elements.
struct Violation {
  std::string law;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};
using Report = std::vector<Violation>;

inline constexpr int kUndefined = -1;

struct Morphism {
  std::string label;
  int src = 0;
  int tgt = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite category given by tables. Objects and morphisms are referred to by
/// their index; compose[g][f] holds g∘f, or kUndefined off composable pairs.
struct FinCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;
  std::vector<std::vector<int>> compose;

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int src(int f) const { return morphisms.at(f).src; }
  int tgt(int f) const { return morphisms.at(f).tgt; }
  const std::string& label(int f) const { return morphisms.at(f).label; }
  /// g∘f; throws PreconditionError when undefined.
  int comp(int g, int f) const;
  /// Morphisms a -> b in index order.
  std::vector<int> hom(int a, int b) const;
  std::optional<int> find_object(const std::string& label) const;
  std::optional<int> find_morphism(const std::string& label) const;

  friend bool operator==(const FinCategory&, const FinCategory&) = default;
};

/// A finite category with a strict tensor: obj_tensor[a][b] = a⊗b and
/// mor_tensor[f][g] = f⊗g.
struct FinMonoidalStructure {
  FinCategory base;
  std::vector<std::vector<int>> obj_tensor;
  std::vector<std::vector<int>> mor_tensor;
  int unit = 0;

  int tensor(int a, int b) const { return obj_tensor.at(a).at(b); }
  int tensor_mor(int f, int g) const { return mor_tensor.at(f).at(g); }

  friend bool operator==(const FinMonoidalStructure&, const FinMonoidalStructure&) = default;
};

/// A finite poset with a monotone, associative, unital binary operation.
struct MonoidalPoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> tensor;
  int unit = 0;

  int size() const { return static_cast<int>(elements.size()); }
};

/// (A, mu : A⊗A -> A, eta : I -> A), by index.
struct MonoidObject {
  int carrier = 0;
  int mu = 0;
  int eta = 0;

  friend auto operator<=>(const MonoidObject&, const MonoidObject&) = default;
};

/// Identity and associativity laws, and that compose is defined exactly on
/// composable pairs. Throws StructuralError on dangling references or
/// mis-shaped tables.
Report validate_category(const FinCategory& c);

/// Strict associativity/unitality on objects and morphisms, bifunctoriality of
/// the tensor (typing, identities, interchange). Includes validate_category.
Report validate_strict_monoidal(const FinMonoidalStructure& m);

/// Partial-order laws plus associativity, unitality and monotonicity.
Report validate_monoidal_poset(const MonoidalPoset& p);

/// One morphism a -> b, labelled "a<=b", for each a <= b.
FinMonoidalStructure poset_as_category(const MonoidalPoset& p);

/// Whether (A, mu, eta) satisfies associativity and both unit laws.
bool is_monoid(const FinMonoidalStructure& m, const MonoidObject& candidate);

/// All monoids, ordered by carrier, then mu, then eta.
std::vector<MonoidObject> enumerate_monoids(const FinMonoidalStructure& m);

/// Bundled small structures used by tests, the CLI and the acceptance suite.
namespace library {

/// ⊥ <= ⊤ under disjunction, unit ⊥.
MonoidalPoset two_or_poset();
/// 0 <= 1 <= 2 under max, unit 0.
MonoidalPoset chain3_max_poset();
/// 0 <= 1 <= 2 under min(a + b, 2), unit 0.
MonoidalPoset chain3_trunc_add_poset();
/// Discrete {u, x} with x⊗x = x, unit u.
MonoidalPoset antichain2_poset();

FinMonoidalStructure two_or();
FinMonoidalStructure chain3_max();
FinMonoidalStructure chain3_trunc_add();
FinMonoidalStructure antichain2();
/// One object, morphisms {1, z} with z∘z = z, tensor = composition.
FinMonoidalStructure one_object_1z();

struct Named {
  std::string name;
  FinMonoidalStructure structure;
};
/// The five structures above, with stable names.
std::vector<Named> classification_library();

}  // namespace library

}  // namespace catalan
