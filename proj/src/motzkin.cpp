#include "catalan/motzkin.hpp"

#include <algorithm>

#include "catalan/errors.hpp"

namespace catalan {

MotzkinWord::MotzkinWord(std::string_view letters) : letters_(letters) {
  if (!is_motzkin(letters)) {
    throw PreconditionError("'" + letters_ + "' is not a Motzkin word");
  }
}

bool is_motzkin(std::string_view word) {
  int balance = 0;
  for (char c : word) {
    switch (c) {
      case 'U': ++balance; break;
      case 'D': --balance; break;
      case 'C': break;
      default: throw InvalidAlphabet("letter '" + std::string(1, c) + "' is not in {U, C, D}");
    }
    if (balance < 0) return false;
  }
  return balance == 0;
}

BigInt motzkin_number(int n) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  std::vector<BigInt> m(n + 1);
  m[0] = 1;
  for (int k = 0; k < n; ++k) {
    BigInt next = m[k];
    for (int j = 0; j + 1 <= k; ++j) next += m[j] * m[k - 1 - j];
    m[k + 1] = next;
  }
  return m[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt catalan_number(int n) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  return binomial(2 * n, n) / (n + 1);
}

std::vector<MotzkinWord> enumerate_motzkin(int n) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  std::vector<MotzkinWord> out;
  std::string prefix;
  auto rec = [&](auto&& self, int open) -> void {
    const int remaining = n - static_cast<int>(prefix.size());
    if (remaining == 0) {
      if (open == 0) out.emplace_back(prefix);
      return;
    }
    if (open > remaining) return;
    for (char c : {'C', 'D', 'U'}) {
      if (c == 'D' && open == 0) continue;
      prefix.push_back(c);
      self(self, open + (c == 'U') - (c == 'D'));
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

MotzkinWord dyck_to_motzkin(const DyckWord& word) {
  if (is_degenerate(word)) {
    throw DegeneracyError("'" + word.str() + "' is degenerate");
  }
  const auto ups = word.up_positions();
  const auto downs = word.down_positions();
  std::string out;
  for (int i = 0; i < word.dimension(); ++i) {
    if (ups[i + 1] == ups[i] + 1) {
      out.push_back('U');
    } else if (downs[i + 1] == downs[i] + 1) {
      out.push_back('D');
    } else {
      out.push_back('C');
    }
  }
  return MotzkinWord(out);
}

DyckWord motzkin_to_dyck(const MotzkinWord& word) {
  const int n = word.length();
  // a: 1-based positions holding D or C; b: positions holding U or C.
  std::vector<int> a{0};
  std::vector<int> b{0};
  for (int i = 1; i <= n; ++i) {
    const char c = word.str()[i - 1];
    if (c != 'U') a.push_back(i);
    if (c != 'D') b.push_back(i);
  }
  a.push_back(n + 1);
  b.push_back(n + 1);
  // U^{a1} D^{b1} U^{a2-a1} D^{b2-b1} ... U^{n+1-ak} D^{n+1-bk}
  std::string out;
  for (std::size_t s = 1; s < a.size(); ++s) {
    out.append(a[s] - a[s - 1], 'U');
    out.append(b[s] - b[s - 1], 'D');
  }
  return DyckWord(out);
}

bool verify_binomial_identity(int n) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += binomial(n, k) * motzkin_number(k);
  return sum == catalan_number(n + 1);
}

}  // namespace catalan
