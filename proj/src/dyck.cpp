#include "catalan/dyck.hpp"

#include <algorithm>
#include <string>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

void check_alphabet(std::string_view word) {
  for (char c : word) {
    if (c != 'U' && c != 'D') {
      throw InvalidAlphabet("letter '" + std::string(1, c) + "' is not in {U, D}");
    }
  }
}

std::vector<int> positions_of(const std::string& s, char letter) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(s.size()); ++k) {
    if (s[k] == letter) out.push_back(k);
  }
  return out;
}

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void extend(std::string& prefix, int ups, int downs, std::vector<DyckWord>& out) {
  if (ups == 0 && downs == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (ups > 0) {
    prefix.push_back('U');
    extend(prefix, ups - 1, downs, out);
    prefix.pop_back();
  }
  if (downs > ups) {
    prefix.push_back('D');
    extend(prefix, ups, downs - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

DyckWord::DyckWord() : letters_("UD") {}

DyckWord::DyckWord(std::string_view letters) : letters_(letters) {
  if (!is_dyck(letters)) {
    throw PreconditionError("'" + letters_ + "' is not a Dyck word");
  }
}

std::vector<int> DyckWord::up_positions() const { return positions_of(letters_, 'U'); }
std::vector<int> DyckWord::down_positions() const { return positions_of(letters_, 'D'); }

bool is_dyck(std::string_view word) {
  check_alphabet(word);
  if (word.empty() || word.size() % 2 != 0) return false;
  // The i-th U precedes the i-th D for all i  <=>  no prefix has more D's than U's.
  int balance = 0;
  for (char c : word) {
    balance += c == 'U' ? 1 : -1;
    if (balance < 0) return false;
  }
  return balance == 0;
}

std::vector<DyckWord> enumerate_dyck(int n) {
  if (n < 0) throw PreconditionError("dimension must be non-negative");
  std::vector<DyckWord> out;
  std::string prefix;
  prefix.reserve(2 * n + 2);
  extend(prefix, n + 1, n + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

DyckWord face(const DyckWord& word, int i) {
  const int n = word.dimension();
  if (n == 0) throw NoFaceError("a 0-simplex has no faces");
  check_index(i, 0, n, "face");
  const int u = word.up_positions()[i];
  const int d = word.down_positions()[i];
  std::string out;
  out.reserve(word.str().size() - 2);
  for (int k = 0; k < static_cast<int>(word.str().size()); ++k) {
    if (k != u && k != d) out.push_back(word.str()[k]);
  }
  return DyckWord(out);
}

DyckWord degeneracy(const DyckWord& word, int i) {
  check_index(i, 0, word.dimension(), "degeneracy");
  const int u = word.up_positions()[i];
  const int d = word.down_positions()[i];
  std::string out;
  out.reserve(word.str().size() + 2);
  for (int k = 0; k < static_cast<int>(word.str().size()); ++k) {
    out.push_back(word.str()[k]);
    if (k == u || k == d) out.push_back(word.str()[k]);
  }
  return DyckWord(out);
}

std::optional<int> is_degenerate(const DyckWord& word) {
  const auto ups = word.up_positions();
  const auto downs = word.down_positions();
  for (int i = 0; i + 1 < static_cast<int>(ups.size()); ++i) {
    if (ups[i + 1] == ups[i] + 1 && downs[i + 1] == downs[i] + 1) return i;
  }
  return std::nullopt;
}

SurjectionPath::SurjectionPath(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty() || image_.front() != 0) {
    throw PreconditionError("surjection image must be non-empty and start at 0");
  }
  for (std::size_t x = 1; x < image_.size(); ++x) {
    const int step = image_[x] - image_[x - 1];
    if (step != 0 && step != 1) {
      throw PreconditionError("surjection image must be non-decreasing without gaps");
    }
  }
}

SurjectionPath SurjectionPath::identity(int n) {
  std::vector<int> image(n + 1);
  for (int x = 0; x <= n; ++x) image[x] = x;
  return SurjectionPath(std::move(image));
}

SurjectionPath SurjectionPath::sigma(int n, int i) {
  check_index(i, 0, n, "sigma");
  std::vector<int> image(n + 2);
  for (int x = 0; x <= n + 1; ++x) image[x] = x <= i ? x : x - 1;
  return SurjectionPath(std::move(image));
}

SurjectionPath SurjectionPath::after(const SurjectionPath& other) const {
  if (other.target_dim() != source_dim()) {
    throw PreconditionError("surjections are not composable");
  }
  std::vector<int> image(other.image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = image_[other.image_[x]];
  return SurjectionPath(std::move(image));
}

DyckWord apply_surjection(const SurjectionPath& phi, const DyckWord& word) {
  if (phi.target_dim() != word.dimension()) {
    throw PreconditionError("surjection target does not match word dimension");
  }
  // phi^* repeats the j-th U and the j-th D once per element of the fibre over j.
  std::vector<int> fibre(word.dimension() + 1, 0);
  for (int v : phi.image()) ++fibre[v];
  std::string out;
  int ups = 0;
  int downs = 0;
  for (char c : word.str()) {
    const int j = c == 'U' ? ups++ : downs++;
    out.append(fibre[j], c);
  }
  return DyckWord(out);
}

std::pair<SurjectionPath, DyckWord> ez_decompose(const DyckWord& word) {
  const auto ups = word.up_positions();
  const auto downs = word.down_positions();
  const int n = word.dimension();
  std::vector<int> image(n + 1, 0);
  std::vector<bool> dropped(word.str().size(), false);
  for (int x = 1; x <= n; ++x) {
    const bool merged = ups[x] == ups[x - 1] + 1 && downs[x] == downs[x - 1] + 1;
    image[x] = image[x - 1] + (merged ? 0 : 1);
    if (merged) dropped[ups[x]] = dropped[downs[x]] = true;
  }
  std::string core;
  for (std::size_t k = 0; k < word.str().size(); ++k) {
    if (!dropped[k]) core.push_back(word.str()[k]);
  }
  return {SurjectionPath(std::move(image)), DyckWord(core)};
}

std::vector<SurjectionPath> enumerate_surjections(int n, int k) {
  std::vector<SurjectionPath> out;
  if (n < 0 || k < 0 || k > n) return out;
  // Choose which k of the n steps x-1 -> x increase the value.
  std::vector<int> image(n + 1, 0);
  auto rec = [&](auto&& self, int x, int level) -> void {
    if (x > n) {
      if (level == k) out.emplace_back(image);
      return;
    }
    image[x] = level;
    self(self, x + 1, level);
    if (level < k) {
      image[x] = level + 1;
      self(self, x + 1, level + 1);
    }
  };
  image[0] = 0;
  rec(rec, 1, 0);
  return out;
}

}  // namespace catalan
