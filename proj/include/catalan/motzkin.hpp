#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catalan/dyck.hpp"

namespace catalan {

using BigInt = boost::multiprecision::cpp_int;

/// A word over {U, C, D} that becomes a (possibly empty) Dyck word once every C
/// is struck out. The empty word is allowed and indexes the unique 0-simplex.
class MotzkinWord {
 public:
  MotzkinWord() = default;
  /// Throws InvalidAlphabet / PreconditionError on bad input.
  explicit MotzkinWord(std::string_view letters);

  const std::string& str() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }

  friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;

 private:
  std::string letters_;
};

bool is_motzkin(std::string_view word);

/// M_0 = 1, M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}.
BigInt motzkin_number(int n);

/// binom(2n, n) / (n + 1).
BigInt catalan_number(int n);

BigInt binomial(int n, int k);

/// All Motzkin words of length n, sorted.
std::vector<MotzkinWord> enumerate_motzkin(int n);

/// Non-degenerate n-simplex -> Motzkin word of length n.
/// Throws DegeneracyError on degenerate input.
MotzkinWord dyck_to_motzkin(const DyckWord& word);

/// Inverse of dyck_to_motzkin.
DyckWord motzkin_to_dyck(const MotzkinWord& word);

/// C_{n+1} == sum_k binom(n, k) M_k, evaluated exactly.
bool verify_binomial_identity(int n);

}  // namespace catalan
