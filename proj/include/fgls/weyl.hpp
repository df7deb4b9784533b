#pragma once

/// @file weyl.hpp
/// @brief Symmetric and hyperoctahedral group combinatorics.
///
/// Elements are signed permutations in one-line (window) notation: w(1..n)
/// with values in {±1..±n} whose absolute values are a permutation.  Type A
/// elements are the unsigned ones.  Products compose as functions,
/// (u*v)(i) = u(v(i)) with u(-k) = -u(k), so a word s_{i_1} s_{i_2} ... s_{i_l}
/// is built from the identity by successive right multiplications.
///
/// Generators: s_0 negates the first value (hyperoctahedral only); s_i for
/// i >= 1 swaps values i and i+1.
///
/// Lengths: type A length is the inversion count; type C (hyperoctahedral)
/// length is inv(w) + sum of |w(i)| over the negative values — both verified
/// against Cayley-graph distances in the tests.

#include "fgls/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fgls {

class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> window) : w_(std::move(window)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      int a = std::abs(v);
      detail::require(a >= 1 && a <= static_cast<int>(w_.size()) &&
                          !seen[static_cast<std::size_t>(a) - 1],
                      "invalid signed permutation window");
      seen[static_cast<std::size_t>(a) - 1] = true;
    }
  }

  static SignedPerm identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return SignedPerm(std::move(w));
  }

  /// s_0 (i = 0, negates the first value) or s_i (swap of values i, i+1).
  static SignedPerm simple_reflection(int n, int i) {
    detail::require(i >= 0 && i < n, "simple reflection index out of range");
    SignedPerm s = identity(n);
    if (i == 0) {
      s.w_[0] = -1;
    } else {
      std::swap(s.w_[static_cast<std::size_t>(i) - 1],
                s.w_[static_cast<std::size_t>(i)]);
    }
    return s;
  }

  int n() const { return static_cast<int>(w_.size()); }

  /// w(i) for i in 1..n (extended oddly: w(-i) = -w(i)).
  int operator()(int i) const {
    detail::require(i != 0 && std::abs(i) <= n(), "argument out of range");
    int v = w_[static_cast<std::size_t>(std::abs(i)) - 1];
    return i > 0 ? v : -v;
  }

  const std::vector<int>& window() const { return w_; }

  bool is_unsigned() const {
    return std::all_of(w_.begin(), w_.end(), [](int v) { return v > 0; });
  }

  SignedPerm operator*(const SignedPerm& v) const {
    detail::require(n() == v.n(), "signed permutation size mismatch");
    std::vector<int> r(w_.size());
    for (int i = 1; i <= n(); ++i)
      r[static_cast<std::size_t>(i) - 1] = (*this)(v(i));
    return SignedPerm(std::move(r));
  }

  SignedPerm inverse() const {
    std::vector<int> r(w_.size());
    for (int i = 1; i <= n(); ++i) {
      int v = (*this)(i);
      r[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0 ? i : -i;
    }
    return SignedPerm(std::move(r));
  }

  bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
  bool operator!=(const SignedPerm& o) const { return !(*this == o); }
  bool operator<(const SignedPerm& o) const { return w_ < o.w_; }

  /// Type A length: inversions.  Requires an unsigned element.
  int length_a() const {
    detail::require(is_unsigned(),
                    "type A length of a genuinely signed permutation");
    return inversions();
  }

  /// Hyperoctahedral length: inv(w) + sum of |w(i)| over negative values.
  int length_c() const {
    int l = inversions();
    for (int v : w_)
      if (v < 0) l -= v;
    return l;
  }

  int length(bool type_c) const { return type_c ? length_c() : length_a(); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(w_[i]);
    }
    return out + ")";
  }

 private:
  int inversions() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::size_t j = i + 1; j < w_.size(); ++j)
        if (w_[i] > w_[j]) ++inv;
    return inv;
  }

  std::vector<int> w_;
};

/// Longest element: type A is the reversal, type C is -identity.
inline SignedPerm longest_element(int n, bool type_c) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = type_c ? -(i + 1) : n - i;
  return SignedPerm(std::move(w));
}

/// Build s_{I_1} s_{I_2} ... s_{I_l} by right multiplications from id.
inline SignedPerm from_word(int n, const std::vector<int>& word, bool type_c) {
  SignedPerm w = SignedPerm::identity(n);
  for (int i : word) {
    detail::require(type_c || i >= 1, "type A words use generators >= 1");
    w = w * SignedPerm::simple_reflection(n, i);
  }
  return w;
}

/// Lexicographically least reduced word: repeatedly take the smallest left
/// descent (the smallest first letter any reduced word can have).
inline std::vector<int> canonical_word(const SignedPerm& w0, bool type_c) {
  std::vector<int> word;
  SignedPerm w = w0;
  const int n = w.n();
  int len = w.length(type_c);
  while (len > 0) {
    bool found = false;
    for (int i = type_c ? 0 : 1; i < n; ++i) {
      SignedPerm cand = SignedPerm::simple_reflection(n, i) * w;
      int cl = cand.length(type_c);
      if (cl < len) {
        word.push_back(i);
        w = cand;
        len = cl;
        found = true;
        break;
      }
    }
    detail::require(found, "no descent found — length function broken");
  }
  return word;
}

/// All reduced words of w (exhaustive; guarded against huge lengths).
inline std::vector<std::vector<int>> reduced_words(const SignedPerm& w,
                                                   bool type_c) {
  detail::require(w.length(type_c) <= 12,
                  "reduced-word enumeration capped at length 12");
  const int n = w.n();
  std::map<SignedPerm, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(const SignedPerm&)> go =
      [&](const SignedPerm& u) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    int len = u.length(type_c);
    if (len == 0) {
      out.push_back({});
    } else {
      for (int i = type_c ? 0 : 1; i < n; ++i) {
        SignedPerm v = u * SignedPerm::simple_reflection(n, i);
        if (v.length(type_c) < len) {
          for (std::vector<int> word : go(v)) {
            word.push_back(i);
            out.push_back(std::move(word));
          }
        }
      }
    }
    return memo.emplace(u, std::move(out)).first->second;
  };
  return go(w);
}

/// Embedding W_n -> W_{n+1} (type C): append the value -(n+1).  Injective and
/// length-shifting: l(e(w)) = l(w) + 2n + 1.
inline SignedPerm embed_c(const SignedPerm& w) {
  std::vector<int> r = w.window();
  r.push_back(-(w.n() + 1));
  return SignedPerm(std::move(r));
}

/// Embedding S_n -> S_{n+1} (type A): shift values up and put 1 last.
/// Injective and length-shifting: l(e(w)) = l(w) + n.
inline SignedPerm embed_a(const SignedPerm& w) {
  detail::require(w.is_unsigned(), "type A embedding needs unsigned input");
  std::vector<int> r;
  r.reserve(w.window().size() + 1);
  for (int v : w.window()) r.push_back(v + 1);
  r.push_back(1);
  return SignedPerm(std::move(r));
}

/// The permutation indexing the m-th nested flag subvariety.
/// Type C: (1, ..., m, -(m+1), ..., -n);  type A: (n-m+1, ..., n, n-m, ..., 1).
inline SignedPerm nu_perm(int n, int m, bool type_c) {
  detail::require(0 <= m && m <= n, "nu_perm: need 0 <= m <= n");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  if (type_c) {
    for (int i = 1; i <= m; ++i) w.push_back(i);
    for (int i = m + 1; i <= n; ++i) w.push_back(-i);
  } else {
    for (int i = n - m + 1; i <= n; ++i) w.push_back(i);
    for (int i = n - m; i >= 1; --i) w.push_back(i);
  }
  return SignedPerm(std::move(w));
}

/// Order-reversing relabeling {1..2n} -> {-n..-1, 1..n} used to pass between
/// indexings of isotropic flags: k <= n maps to -(n+1-k), k > n maps to k-n.
inline int g_bijection(int n, int k) {
  detail::require(k >= 1 && k <= 2 * n, "g_bijection: k out of range");
  return k <= n ? -(n + 1 - k) : k - n;
}

/// All elements of the group (type C: hyperoctahedral W_n; type A: S_n).
inline std::vector<SignedPerm> all_elements(int n, bool type_c) {
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::vector<SignedPerm> out;
  std::sort(base.begin(), base.end());
  do {
    if (!type_c) {
      out.push_back(SignedPerm(base));
      continue;
    }
    // All 2^n sign patterns.
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w = base;
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) w[static_cast<std::size_t>(b)] *= -1;
      out.push_back(SignedPerm(std::move(w)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Parse "-1,2" / "(-1,2)" one-line windows, or unsigned cycle notation
/// "(1 2)(3 4)" / "(1,2)(3,4)" relative to n.
inline SignedPerm parse_perm(const std::string& text, int n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  detail::require(!s.empty(), "empty permutation");
  // Cycle notation: more than one parenthesized group, or a group shorter
  // than n entries; one-line notation may also be wrapped in parentheses.
  auto parse_ints = [](const std::string& chunk) {
    std::vector<int> vals;
    std::size_t i = 0;
    while (i < chunk.size()) {
      std::size_t j = i;
      if (chunk[j] == '-' || chunk[j] == '+') ++j;
      while (j < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[j])))
        ++j;
      detail::require(j > i && (j == chunk.size() || chunk[j] == ','),
                      "cannot parse permutation entry in '" + chunk + "'");
      vals.push_back(std::stoi(chunk.substr(i, j - i)));
      i = j + (j < chunk.size() ? 1 : 0);
    }
    return vals;
  };
  if (s.front() == '(') {
    // Split parenthesized groups.
    std::vector<std::vector<int>> groups;
    std::size_t i = 0;
    while (i < s.size()) {
      detail::require(s[i] == '(', "bad permutation syntax '" + text + "'");
      std::size_t close = s.find(')', i);
      detail::require(close != std::string::npos,
                      "unbalanced parenthesis in '" + text + "'");
      std::string inner = s.substr(i + 1, close - i - 1);
      // Cycles may be space- or comma-separated; normalize spaces already
      // removed, so only commas remain.
      groups.push_back(parse_ints(inner));
      i = close + 1;
    }
    if (groups.size() == 1 &&
        static_cast<int>(groups[0].size()) == n) {
      return SignedPerm(groups[0]);  // one-line in parentheses
    }
    // Cycle notation (unsigned).
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i2 = 0; i2 < n; ++i2) w[static_cast<std::size_t>(i2)] = i2 + 1;
    for (const auto& cyc : groups) {
      for (int v : cyc)
        detail::require(v >= 1 && v <= n,
                        "cycle entries must lie in 1..n in '" + text + "'");
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k];
        int to = cyc[(k + 1) % cyc.size()];
        w[static_cast<std::size_t>(from) - 1] = to;
      }
    }
    return SignedPerm(std::move(w));
  }
  std::vector<int> vals = parse_ints(s);
  detail::require(static_cast<int>(vals.size()) == n,
                  "permutation '" + text + "' must have " + std::to_string(n) +
                      " entries");
  return SignedPerm(std::move(vals));
}

}  // namespace fgls
