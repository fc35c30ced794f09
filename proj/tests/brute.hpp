#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library except for Family and the context accessors.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "affine_abacus/group.hpp"

namespace brute {

using affine_abacus::Family;

inline int fmod(int a, int b) { return ((a % b) + b) % b; }

// Value of the mirrored permutation with window w at k.
inline int eval(const std::vector<int>& w, int k) {
  const int N = static_cast<int>(w.size()) + 1;
  const int r = fmod(k, N);
  const int m = (k - r) / N;
  if (r == 0) return k;
  return w[r - 1] + m * N;
}

inline std::vector<int> generator(Family f, int n, int g) {
  const int N = 2 * n + 1;
  std::vector<int> w(2 * n);
  for (int k = 1; k <= 2 * n; ++k) w[k - 1] = k;
  auto swap_vals = [&](int a, int b) {
    // a <-> b, mirrored
    for (int k = 1; k <= 2 * n; ++k) {
      if (w[k - 1] == a) w[k - 1] = b;
      else if (w[k - 1] == b) w[k - 1] = a;
      else if (w[k - 1] == N - a) w[k - 1] = N - b;
      else if (w[k - 1] == N - b) w[k - 1] = N - a;
    }
  };
  const bool s0D = f == Family::BtildeOverB || f == Family::DtildeOverD;
  const bool snD = f == Family::BtildeOverD || f == Family::DtildeOverD;
  if (g == 0) {
    // s0 sends 1 to -1 (and 2 to -2 for the D flavour, swapping)
    if (s0D) {
      w[0] = -2;
      w[1] = -1;
      w[2 * n - 1] = N + 2;
      w[2 * n - 2] = N + 1;
    } else {
      w[0] = -1;
      w[2 * n - 1] = N + 1;
    }
  } else if (g == n) {
    if (snD) {
      swap_vals(n - 1, n + 1);
    } else {
      w[n - 1] = n + 1;
      w[n] = n;
    }
  } else {
    swap_vals(g, g + 1);
  }
  return w;
}

// Window of s * w.
inline std::vector<int> left(const std::vector<int>& s, const std::vector<int>& w) {
  std::vector<int> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = eval(s, w[k]);
  return out;
}

// The finite group acts on positions, so the value set names the coset.
inline std::vector<int> coset_key(std::vector<int> w) {
  std::sort(w.begin(), w.end());
  return w;
}

struct Coset {
  std::vector<int> window;  // some representative
  int length;
};

// Breadth-first search over cosets by left multiplication.
inline std::map<std::vector<int>, Coset> coset_lengths(Family f, int n, int max_len) {
  std::map<std::vector<int>, Coset> seen;
  std::vector<int> e(2 * n);
  for (int k = 1; k <= 2 * n; ++k) e[k - 1] = k;
  seen[coset_key(e)] = {e, 0};
  std::vector<std::vector<int>> frontier{e};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int g = 0; g <= n; ++g) {
        auto v = left(generator(f, n, g), w);
        auto k = coset_key(v);
        if (seen.count(k)) continue;
        seen[k] = {v, len};
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Cosets reached by subwords of a word (subword property).
inline std::set<std::vector<int>> below(Family f, int n, const std::vector<int>& word) {
  std::set<std::vector<int>> out;
  const int L = static_cast<int>(word.size());
  for (long m = 0; m < (1L << L); ++m) {
    std::vector<int> w(2 * n);
    for (int k = 1; k <= 2 * n; ++k) w[k - 1] = k;
    for (int k = L - 1; k >= 0; --k) {
      if (m >> k & 1) w = left(generator(f, n, word[k]), w);
    }
    out.insert(coset_key(w));
  }
  return out;
}

inline int hook(const std::vector<int>& rows, int i, int j) {
  int below = 0;
  for (std::size_t r = i; r < rows.size(); ++r) {
    if (rows[r] >= j) ++below;
  }
  return rows[i - 1] - j + below + 1;
}

inline bool is_core(const std::vector<int>& rows, int h) {
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    for (int j = 1; j <= rows[i - 1]; ++j) {
      if (hook(rows, static_cast<int>(i), j) % h == 0) return false;
    }
  }
  return true;
}

inline bool is_symmetric(const std::vector<int>& rows) {
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    for (int j = 1; j <= rows[i - 1]; ++j) {
      if (j > static_cast<int>(rows.size()) || rows[j - 1] < static_cast<int>(i)) return false;
    }
  }
  return true;
}

}  // namespace brute
