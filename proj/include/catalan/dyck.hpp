#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

/// A simplex of the Catalan simplicial set, written as a Dyck word over {U, D}.
///
/// A word of length 2n+2 is an n-simplex. The i-th U must precede the i-th D
/// for every i; construction enforces this and throws otherwise.
class DyckWord {
 public:
  /// The unique 0-simplex "UD".
  DyckWord();
  /// Throws InvalidAlphabet on letters other than U/D and PreconditionError
  /// when the letters do not form a Dyck word.
  explicit DyckWord(std::string_view letters);

  const std::string& str() const noexcept { return letters_; }
  int dimension() const noexcept { return static_cast<int>(letters_.size() / 2) - 1; }

  /// Positions of the U's (resp. D's) in left-to-right order.
  std::vector<int> up_positions() const;
  std::vector<int> down_positions() const;

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string letters_;
};

/// True iff `word` is a Dyck word. Throws InvalidAlphabet for letters outside {U, D}.
bool is_dyck(std::string_view word);

/// All Dyck words of dimension n (length 2n+2), sorted by ASCII order.
std::vector<DyckWord> enumerate_dyck(int n);

/// d_i: delete the (i+1)-st U and the (i+1)-st D.
DyckWord face(const DyckWord& word, int i);

/// s_i: repeat the (i+1)-st U and the (i+1)-st D.
DyckWord degeneracy(const DyckWord& word, int i);

/// Smallest i with word = s_i(y) for some y, if any.
std::optional<int> is_degenerate(const DyckWord& word);

/// An order-preserving surjection [n] ->> [k], stored by its image sequence.
class SurjectionPath {
 public:
  /// Throws PreconditionError unless `image` is non-decreasing, starts at 0 and
  /// steps by at most one (i.e. is surjective onto {0..k}).
  explicit SurjectionPath(std::vector<int> image);

  static SurjectionPath identity(int n);
  /// sigma_i : [n+1] ->> [n].
  static SurjectionPath sigma(int n, int i);

  int source_dim() const noexcept { return static_cast<int>(image_.size()) - 1; }
  int target_dim() const noexcept { return image_.empty() ? -1 : image_.back(); }
  const std::vector<int>& image() const noexcept { return image_; }
  bool is_identity() const noexcept { return source_dim() == target_dim(); }

  /// this ∘ other (apply `other` first).
  SurjectionPath after(const SurjectionPath& other) const;

  friend bool operator==(const SurjectionPath&, const SurjectionPath&) = default;

 private:
  std::vector<int> image_;
};

/// The action phi^*: C_k -> C_n of a surjection phi : [n] ->> [k].
DyckWord apply_surjection(const SurjectionPath& phi, const DyckWord& word);

/// Eilenberg-Zilber decomposition: the unique (phi, y) with y non-degenerate and
/// word = phi^*(y).
std::pair<SurjectionPath, DyckWord> ez_decompose(const DyckWord& word);

/// All order-preserving surjections [n] ->> [k], in lexicographic order of images.
std::vector<SurjectionPath> enumerate_surjections(int n, int k);

}  // namespace catalan
