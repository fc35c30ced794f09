#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"

namespace affine_abacus {

/// A mirrored Z-permutation w, stored by its base window [w(1), ..., w(2n)].
/// Every other value follows from w(k + N) = w(k) + N and w(-k) = -w(k).
class MirroredPermutation {
 public:
  /// Validates the three base-window conditions: distinct nonzero residues
  /// mod N and w(i) + w(N - i) = N. Does not check coset minimality or
  /// membership in the family's subgroup.
  static MirroredPermutation from_base_window(const GroupContext& ctx, std::span<const int> entries) {
    const int N = ctx.modulus();
    const int size = ctx.window_size();
    if (static_cast<int>(entries.size()) != size) {
      throw Error(ErrorCode::WrongLength, "base window needs " + std::to_string(size) + " entries, got " +
                                              std::to_string(entries.size()));
    }
    std::vector<bool> seen(N, false);
    for (int e : entries) {
      const int r = detail::mod(e, N);
      if (r == 0) throw Error(ErrorCode::ZeroResidue, "entry " + std::to_string(e) + " is 0 mod N");
      if (seen[r]) throw Error(ErrorCode::ResidueClash, "two entries share residue " + std::to_string(r));
      seen[r] = true;
    }
    for (int i = 1; i <= size; ++i) {
      if (entries[i - 1] + entries[N - i - 1] != N) {
        throw Error(ErrorCode::BalanceViolation,
                    "w(" + std::to_string(i) + ") + w(" + std::to_string(N - i) + ") != " + std::to_string(N));
      }
    }
    return MirroredPermutation(ctx, std::vector<int>(entries.begin(), entries.end()));
  }

  static MirroredPermutation identity(const GroupContext& ctx) {
    std::vector<int> w(ctx.window_size());
    for (int i = 0; i < ctx.window_size(); ++i) w[i] = i + 1;
    return MirroredPermutation(ctx, std::move(w));
  }

  const GroupContext& context() const noexcept { return ctx_; }
  std::span<const int> window() const noexcept { return window_; }

  /// w(k) for any integer k.
  int operator()(int k) const {
    const int N = ctx_.modulus();
    const int r = detail::mod(k, N);
    if (r == 0) return k;
    return window_[r - 1] + (k - r);
  }

  /// The position k with w(k) = value.
  int inverse(int value) const {
    const int N = ctx_.modulus();
    const int r = detail::mod(value, N);
    if (r == 0) return value;
    for (int p = 1; p <= ctx_.window_size(); ++p) {
      if (detail::mod(window_[p - 1], N) == r) return p + (value - window_[p - 1]);
    }
    return value;  // unreachable for a validated window
  }

  friend bool operator==(const MirroredPermutation& a, const MirroredPermutation& b) {
    return a.ctx_ == b.ctx_ && a.window_ == b.window_;
  }

 private:
  MirroredPermutation(GroupContext ctx, std::vector<int> window) : ctx_(ctx), window_(std::move(window)) {}

  // Builds an unvalidated window; callers guarantee the invariants.
  friend MirroredPermutation make_unchecked(const GroupContext& ctx, std::vector<int> window);

  GroupContext ctx_;
  std::vector<int> window_;
};

inline MirroredPermutation make_unchecked(const GroupContext& ctx, std::vector<int> window) {
  return MirroredPermutation(ctx, std::move(window));
}

inline MirroredPermutation from_base_window(const GroupContext& ctx, std::span<const int> entries) {
  return MirroredPermutation::from_base_window(ctx, entries);
}

inline int evaluate(const MirroredPermutation& w, int k) { return w(k); }

/// Window images [s(1), ..., s(2n)] of generator g, flavor chosen by the family.
inline std::vector<int> generator_window(const GroupContext& ctx, int g) {
  require_generator(ctx, g);
  const int n = ctx.rank();
  const int N = ctx.modulus();
  std::vector<int> img(2 * n);
  for (int i = 1; i <= n; ++i) img[i - 1] = i;
  if (g == 0) {
    if (uses_s0_D(ctx.family())) {
      img[0] = -2;
      img[1] = -1;
    } else {
      img[0] = -1;
    }
  } else if (g == n) {
    if (uses_sn_D(ctx.family())) {
      img[n - 2] = n + 1;
      img[n - 1] = n + 2;
    } else {
      img[n - 1] = n + 1;
    }
  } else {
    std::swap(img[g - 1], img[g]);
  }
  for (int i = 1; i <= n; ++i) img[N - i - 1] = N - img[i - 1];
  return img;
}

inline MirroredPermutation generator_permutation(const GroupContext& ctx, int g) {
  return make_unchecked(ctx, generator_window(ctx, g));
}

/// s_g * w: the left action relabels values. The result is generally not a
/// minimal coset representative; see normalize().
inline MirroredPermutation apply_generator_left(const MirroredPermutation& w, int g) {
  const auto s = generator_permutation(w.context(), g);
  std::vector<int> out(w.window().begin(), w.window().end());
  for (int& v : out) v = s(v);
  return make_unchecked(w.context(), std::move(out));
}

namespace detail {

// w * s_g: permutes positions. Only the oracle and tests need this.
inline MirroredPermutation apply_generator_right(const MirroredPermutation& w, int g) {
  const auto s = generator_permutation(w.context(), g);
  std::vector<int> out(w.context().window_size());
  for (int k = 1; k <= w.context().window_size(); ++k) out[k - 1] = w(s(k));
  return make_unchecked(w.context(), std::move(out));
}

// |{ i <= pos_bound : w(i) >= value_bound }|, counted per residue class.
inline int count_displaced(const MirroredPermutation& w, int pos_bound, int value_bound) {
  const int N = w.context().modulus();
  int count = 0;
  for (int r = 1; r <= w.context().window_size(); ++r) {
    const int hi = floor_div(pos_bound - r, N);
    const int lo = ceil_div(value_bound - w.window()[r - 1], N);
    if (hi >= lo) count += hi - lo + 1;
  }
  return count;
}

}  // namespace detail

/// Parity conditions that cut B~ and D~ out of C~.
inline bool family_membership(const MirroredPermutation& w, const GroupContext& ctx) {
  const int n = ctx.rank();
  const bool left_even = detail::count_displaced(w, 0, 1) % 2 == 0;
  const bool right_even = detail::count_displaced(w, n, n + 1) % 2 == 0;
  switch (ctx.family()) {
    case Family::CtildeOverC: return true;
    case Family::BtildeOverB: return left_even;
    case Family::BtildeOverD: return right_even;
    case Family::DtildeOverD: return left_even && right_even;
  }
  return false;
}

inline bool family_membership(const MirroredPermutation& w) { return family_membership(w, w.context()); }

/// Sorting condition for minimal length coset representatives.
inline bool is_minimal_coset_rep(const MirroredPermutation& w) {
  const int n = w.context().rank();
  const auto win = w.window();
  for (int i = 1; i < n; ++i) {
    if (win[i - 1] >= win[i]) return false;
  }
  const int last = uses_sn_D(w.context().family()) ? n + 2 : n + 1;
  return win[n - 1] < win[last - 1];
}

/// The minimal length representative of the coset w W. Sorts the window
/// entries; in the sn^D families positions n and n+1 are then ordered so the
/// right-hand parity count is even.
inline MirroredPermutation normalize(const MirroredPermutation& w) {
  const auto& ctx = w.context();
  const int n = ctx.rank();
  std::vector<int> sorted(w.window().begin(), w.window().end());
  std::sort(sorted.begin(), sorted.end());
  auto rep = make_unchecked(ctx, sorted);
  if (uses_sn_D(ctx.family()) && detail::count_displaced(rep, n, n + 1) % 2 != 0) {
    std::swap(sorted[n - 1], sorted[n]);
    rep = make_unchecked(ctx, std::move(sorted));
  }
  return rep;
}

enum class DescentClass { Descent, Ascent, Neither };

inline std::string_view to_string(DescentClass d) {
  switch (d) {
    case DescentClass::Descent: return "descent";
    case DescentClass::Ascent: return "ascent";
    case DescentClass::Neither: return "neither";
  }
  return "?";
}

/// Classifies s_g acting on the coset of a minimal representative w.
///
/// Neither when s_g w lies in the same coset. Otherwise s_g is a left descent
/// of w exactly when it is a right descent of w^{-1}, which for mirrored
/// permutations is a comparison of two values of w^{-1}.
inline DescentClass descent_class(const MirroredPermutation& w, int g) {
  const auto& ctx = w.context();
  require_generator(ctx, g);
  if (!is_minimal_coset_rep(w)) throw Error(ErrorCode::NotMinimal, "descent_class needs a minimal coset representative");
  if (normalize(apply_generator_left(w, g)) == w) return DescentClass::Neither;

  const int n = ctx.rank();
  auto u = [&](int v) { return w.inverse(v); };
  bool descent = false;
  if (g == 0) {
    descent = uses_s0_D(ctx.family()) ? u(-1) > u(2) : u(-1) > u(1);
  } else if (g == n) {
    descent = uses_sn_D(ctx.family()) ? u(n - 1) > u(n + 1) : u(n) > u(n + 1);
  } else {
    descent = u(g) > u(g + 1);
  }
  return descent ? DescentClass::Descent : DescentClass::Ascent;
}

}  // namespace affine_abacus
