#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catalan/fin_monoidal.hpp"

namespace catalan {

/// A finite category with a (not necessarily strict) tensor, unit and
/// constraint components
///   alpha[a][b][c] : (a⊗b)⊗c -> a⊗(b⊗c),  lambda[a] : I⊗a -> a,
///   rho[a] : a -> a⊗I,                     kappa : I -> I.
/// kappa is absent for an ordinary skew-monoidal structure and then reads as 1_I.
struct SkewData {
  FinCategory base;
  std::vector<std::vector<int>> obj_tensor;
  std::vector<std::vector<int>> mor_tensor;
  int unit = 0;
  std::vector<std::vector<std::vector<int>>> alpha;
  std::vector<int> lambda;
  std::vector<int> rho;
  std::optional<int> kappa;

  int tensor(int a, int b) const { return obj_tensor.at(a).at(b); }
  int tensor_mor(int f, int g) const { return mor_tensor.at(f).at(g); }
  int kappa_or_identity() const { return kappa.value_or(base.identity.at(unit)); }
};

/// Throws StructuralError unless the base is a category, the tensor is a
/// bifunctor and every component has the stated source and target.
void check_skew_structure(const SkewData& d);

/// alpha natural in each of its three arguments, lambda and rho in theirs.
/// Runs check_skew_structure first.
Report check_naturality(const SkewData& d);

struct ConditionResult {
  std::string name;
  bool pass = true;
  /// Objects (by index) of the first failing instance; empty when passing.
  std::vector<int> witness;
};

struct PentagonReport {
  std::vector<ConditionResult> conditions;

  bool all_pass() const;
  const ConditionResult& at(const std::string& name) const;
};

/// The five skew-monoidal axioms, named "5.1" .. "5.5".
PentagonReport check_axioms(const SkewData& d);

/// The nine pentagons carried by the non-degenerate 4-simplices, named
/// "A1" .. "A9". Each is a pentagon X -> Y -> Z -> W against X -> V -> W,
/// evaluated by composing its edges.
PentagonReport check_pentagons(const SkewData& d);

/// [A1..A9 all hold] <=> [5.1..5.5 all hold and kappa = 1_I].
bool verify_equivalence(const SkewData& d);

/// Every alpha, lambda and rho component is invertible.
bool is_monoidal(const SkewData& d);

/// Constraint components of a poset-carried structure are the unique order
/// witnesses; nullopt when some witness is missing (e.g. I⊗a not <= a).
/// `tensor` must be monotone.
std::optional<SkewData> skew_from_poset(const MonoidalPoset& p);

/// Carriers for exhaustive sweeps.
struct Carrier {
  std::string name;
  FinCategory category;
  bool is_poset = false;
};

/// "point", "chain2", "chain3", "antichain2", "one-object-1z", "retract".
/// Throws PreconditionError for unknown names.
Carrier named_carrier(const std::string& name);
std::vector<std::string> carrier_names();

struct SweepOptions {
  /// Maximum number of search nodes (partial assignments) examined.
  std::size_t budget = std::size_t{5'000'000};
  /// Vary kappa over End(I); otherwise kappa is left at the identity.
  bool all_kappas = true;
};

/// Every bifunctor tensor, unit and natural family of components (and, when
/// requested, every kappa) over the carrier. Axioms are not imposed.
/// Carriers are capped at 3 objects for posets and at 2 objects / 6 morphisms
/// otherwise (BudgetError).
std::vector<SkewData> enumerate_skew_candidates(const Carrier& carrier,
                                                const SweepOptions& options = {});

/// The candidates with kappa = 1_I that satisfy 5.1 .. 5.5.
std::vector<SkewData> enumerate_skew_structures(const Carrier& carrier,
                                                const SweepOptions& options = {});

struct SweepSummary {
  std::size_t candidates = 0;
  std::size_t skew_monoidal = 0;       // 5.1..5.5 hold, kappa = 1
  std::size_t pentagons_hold = 0;      // A1..A9 hold
  std::size_t monoidal = 0;            // skew-monoidal with invertible constraints
  std::size_t equivalence_failures = 0;
  std::size_t a5_without_identity_kappa = 0;
  std::size_t a8_a9_failures = 0;      // with kappa = 1
  std::size_t non_split_unit = 0;      // skew-monoidal with rho_I ∘ lambda_I != 1
};

SweepSummary sweep(const Carrier& carrier, const SweepOptions& options = {});

}  // namespace catalan
