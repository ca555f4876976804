#pragma once

#include <cstddef>
#include <string>

#include "catalan/fin_monoidal.hpp"
#include "catalan/sset.hpp"

namespace catalan {

/// A 2-simplex of the monoidal nerve: a morphism a12 ⊗ a01 -> a02.
/// Faces are (d_0, d_1, d_2) = (a12, a02, a01).
struct NerveTriangle {
  int a12 = 0;
  int a02 = 0;
  int a01 = 0;
  int mor = 0;

  friend auto operator<=>(const NerveTriangle&, const NerveTriangle&) = default;
};

/// "f[a12|a02|a01]".
std::string triangle_label(const FinMonoidalStructure& m, const NerveTriangle& t);

/// Whether the faces (x0, x1, x2, x3) = (A123, A023, A013, A012) of a would-be
/// 3-simplex satisfy A013 ∘ (A123 ⊗ 1) = A023 ∘ (1 ⊗ A012). Assumes the
/// triangles already agree on shared edges.
bool tetrahedron_commutes(const FinMonoidalStructure& m, const NerveTriangle& x0,
                          const NerveTriangle& x1, const NerveTriangle& x2,
                          const NerveTriangle& x3);

inline constexpr int kMaxNerveDimension = 6;

/// The monoidal nerve of a strict monoidal structure, truncated at `top`.
///
/// Level 0 is "*", level 1 the objects, level 2 the triangles
/// a12 ⊗ a01 -> a02, level 3 the compatible quadruples of triangles whose
/// square commutes; higher levels come from 3-coskeletal extension.
/// Throws StructuralError if `m` fails validate_strict_monoidal and
/// BudgetError beyond `budget` simplices or above kMaxNerveDimension.
TruncatedSSet monoidal_nerve(const FinMonoidalStructure& m, int top,
                             std::size_t budget = std::size_t{1'000'000});

/// Recover the triangle behind a level-2 simplex of a nerve built above.
NerveTriangle nerve_triangle(const FinMonoidalStructure& m, const TruncatedSSet& nerve, int x);

}  // namespace catalan
