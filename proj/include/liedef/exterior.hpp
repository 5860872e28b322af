#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liedef/errors.hpp"

namespace liedef {

/// Largest ambient dimension accepted by default; dense L_k grids grow as
/// N * C(N, k).
inline constexpr unsigned kDefaultMaxDim = 8;

/// Guard on k + l for unshuffle enumeration.
inline constexpr unsigned kMaxUnshuffleSize = 12;

/// Binomial coefficient with C(m, k) = 0 for m < k.
constexpr std::uint64_t binomial(unsigned m, unsigned k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

/// Strictly increasing word i1 < ... < ik of basis indices (1-based),
/// naming the basis element f_{i1} ^ ... ^ f_{ik}.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<unsigned> entries) : MultiIndex(std::vector<unsigned>(entries)) {}
  explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0 || (i > 0 && e_[i - 1] >= e_[i])) {
        throw Error(Errc::out_of_range, "multi-index must be strictly increasing and 1-based");
      }
    }
  }

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<unsigned>& entries() const { return e_; }
  unsigned back() const { return e_.back(); }

  /// "(1,3)"
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  /// "13", the superscript used in basis names like psi^{13}_2.
  std::string compact() const {
    std::string s;
    for (unsigned v : e_) s += std::to_string(v);
    return s;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// Length first, then colexicographic (agrees with ordinal_of).
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<unsigned> e_;
};

/// The n-th (1-based) basis word of Lambda^k V for dim V = `dim`:
/// S(n,1) = (n); S(n,k) = S(n - C(l-1,k), k-1) followed by l, where
/// C(l-1,k) < n <= C(l,k).
inline MultiIndex s_index(std::uint64_t n, unsigned k, unsigned dim) {
  if (n < 1 || n > binomial(dim, k)) {
    throw Error(Errc::out_of_range, "word ordinal " + std::to_string(n) + " outside 1..C(" +
                                        std::to_string(dim) + "," + std::to_string(k) + ")");
  }
  std::vector<unsigned> out(k);
  for (unsigned kk = k; kk >= 1; --kk) {
    if (kk == 1) {
      out[0] = static_cast<unsigned>(n);
      break;
    }
    unsigned l = kk;
    while (binomial(l, kk) < n) ++l;
    out[kk - 1] = l;
    n -= binomial(l - 1, kk);
  }
  return MultiIndex(std::move(out));
}

/// Inverse of s_index: 1 + sum_m C(i_m - 1, m).
inline std::uint64_t ordinal_of(const MultiIndex& word) {
  std::uint64_t n = 1;
  for (std::size_t m = 0; m < word.size(); ++m) n += binomial(word[m] - 1, static_cast<unsigned>(m + 1));
  return n;
}

/// All basis words of Lambda^k V in ordinal order.
inline std::vector<MultiIndex> words(unsigned dim, unsigned k) {
  std::vector<MultiIndex> out;
  const std::uint64_t count = binomial(dim, k);
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(s_index(n, k, dim));
  return out;
}

/// Permutation of 1..k+l increasing on the first k and last l slots.
struct Unshuffle {
  std::vector<unsigned> perm;  // perm[i] = sigma(i+1), 1-based values
  unsigned k = 0;
  int sign = 1;
};

inline int permutation_sign(const std::vector<unsigned>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Sh(k, l) with the first block in lexicographic order.
inline std::vector<Unshuffle> unshuffles(unsigned k, unsigned l) {
  const unsigned n = k + l;
  if (n > kMaxUnshuffleSize) {
    throw Error(Errc::too_large, "unshuffles of size " + std::to_string(n) + " exceed guard " +
                                     std::to_string(kMaxUnshuffleSize));
  }
  std::vector<Unshuffle> out;
  out.reserve(binomial(n, k));
  std::vector<unsigned> first(k);
  for (unsigned i = 0; i < k; ++i) first[i] = i + 1;
  while (true) {
    Unshuffle u;
    u.k = k;
    u.perm = first;
    for (unsigned v = 1, i = 0; v <= n; ++v) {
      if (i < k && first[i] == v) {
        ++i;
      } else {
        u.perm.push_back(v);
      }
    }
    u.sign = permutation_sign(u.perm);
    out.push_back(std::move(u));
    // next k-combination of 1..n in lex order
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && first[i] == n - k + static_cast<unsigned>(i) + 1) --i;
    if (i < 0) break;
    ++first[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) first[j] = first[j - 1] + 1;
  }
  return out;
}

struct SignedWord {
  MultiIndex word;
  int sign = 1;
};

/// a ^ b re-sorted into an increasing word; nullopt when an index repeats.
inline std::optional<SignedWord> wedge(const MultiIndex& a, const MultiIndex& b) {
  std::vector<unsigned> merged;
  merged.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return SignedWord{MultiIndex(std::move(merged)), inversions % 2 == 0 ? 1 : -1};
}

struct Split {
  MultiIndex left;
  MultiIndex right;
  int sign = 1;
};

/// Comultiplication: sum over k = 1..n-1 and Sh(k, n-k) of signed splits.
inline std::vector<Split> comultiply(const MultiIndex& word) {
  std::vector<Split> out;
  const unsigned n = static_cast<unsigned>(word.size());
  for (unsigned k = 1; k < n; ++k) {
    for (const Unshuffle& u : unshuffles(k, n - k)) {
      std::vector<unsigned> left, right;
      for (unsigned i = 0; i < k; ++i) left.push_back(word[u.perm[i] - 1]);
      for (unsigned i = k; i < n; ++i) right.push_back(word[u.perm[i] - 1]);
      out.push_back(Split{MultiIndex(std::move(left)), MultiIndex(std::move(right)), u.sign});
    }
  }
  return out;
}

}  // namespace liedef
