#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"
#include "affine_abacus/mirrored_permutation.hpp"

namespace affine_abacus {

/// Balanced flush abacus on runners 1..2n. levels[r-1] is the level of the
/// lowest bead on runner r; position mN + r is a bead iff m <= levels[r-1].
class Abacus {
 public:
  static Abacus from_levels(const GroupContext& ctx, std::span<const int> levels) {
    const int size = ctx.window_size();
    const int N = ctx.modulus();
    if (static_cast<int>(levels.size()) != size) {
      throw Error(ErrorCode::WrongLength, "abacus needs " + std::to_string(size) + " levels, got " +
                                              std::to_string(levels.size()));
    }
    for (int r = 1; r <= size; ++r) {
      if (levels[r - 1] + levels[N - r - 1] != 0) {
        throw Error(ErrorCode::BalanceViolation, "runners " + std::to_string(r) + " and " +
                                                     std::to_string(N - r) + " are not balanced");
      }
    }
    return Abacus(ctx, std::vector<int>(levels.begin(), levels.end()));
  }

  static Abacus identity(const GroupContext& ctx) {
    return Abacus(ctx, std::vector<int>(ctx.window_size(), 0));
  }

  const GroupContext& context() const noexcept { return ctx_; }
  std::span<const int> levels() const noexcept { return levels_; }
  int level(int runner) const { return levels_[runner - 1]; }

  /// Label of the lowest bead on a runner.
  int lowest_bead(int runner) const { return level(runner) * ctx_.modulus() + runner; }

  friend bool operator==(const Abacus& a, const Abacus& b) { return a.ctx_ == b.ctx_ && a.levels_ == b.levels_; }

 private:
  Abacus(GroupContext ctx, std::vector<int> levels) : ctx_(ctx), levels_(std::move(levels)) {}
  friend Abacus abacus_unchecked(const GroupContext& ctx, std::vector<int> levels);

  GroupContext ctx_;
  std::vector<int> levels_;
};

inline Abacus abacus_unchecked(const GroupContext& ctx, std::vector<int> levels) {
  return Abacus(ctx, std::move(levels));
}

inline int runner_of(const GroupContext& ctx, int p) { return detail::mod(p, ctx.modulus()); }
inline int level_of(const GroupContext& ctx, int p) { return detail::floor_div(p, ctx.modulus()); }

inline bool bead_at(const Abacus& a, int p) {
  const int r = runner_of(a.context(), p);
  if (r == 0) throw Error(ErrorCode::ZeroResidue, "position " + std::to_string(p) + " is not on a runner");
  return level_of(a.context(), p) <= a.level(r);
}

inline Abacus from_permutation(const MirroredPermutation& w) {
  const auto& ctx = w.context();
  std::vector<int> levels(ctx.window_size());
  for (int e : w.window()) levels[runner_of(ctx, e) - 1] = level_of(ctx, e);
  return abacus_unchecked(ctx, std::move(levels));
}

inline bool is_balanced(const Abacus& a) {
  const int N = a.context().modulus();
  for (int r = 1; r < N; ++r) {
    if (a.level(r) + a.level(N - r) != 0) return false;
  }
  return true;
}

/// Number of gaps at positions below N.
inline int gaps_before_N(const Abacus& a) {
  int gaps = 0;
  for (int lv : a.levels()) gaps += std::max(0, -lv);
  return gaps;
}

inline bool is_even(const Abacus& a) { return gaps_before_N(a) % 2 == 0; }

inline MirroredPermutation to_permutation(const Abacus& a) {
  const auto& ctx = a.context();
  if (requires_even(ctx.family()) && !is_even(a)) {
    throw Error(ErrorCode::ParityViolation, std::string(family_name(ctx.family())) + " needs an even abacus");
  }
  std::vector<int> entries(ctx.window_size());
  for (int r = 1; r <= ctx.window_size(); ++r) entries[r - 1] = a.lowest_bead(r);
  return normalize(make_unchecked(ctx, std::move(entries)));
}

/// First gap in reading order.
inline int first_gap(const Abacus& a) {
  const int N = a.context().modulus();
  int best = 0;
  bool have = false;
  for (int r = 1; r <= a.context().window_size(); ++r) {
    const int g = (a.level(r) + 1) * N + r;
    if (!have || g < best) best = g;
    have = true;
  }
  return best;
}

/// Last bead in reading order.
inline int last_bead(const Abacus& a) {
  int best = 0;
  bool have = false;
  for (int r = 1; r <= a.context().window_size(); ++r) {
    const int b = a.lowest_bead(r);
    if (!have || b > best) best = b;
    have = true;
  }
  return best;
}

inline bool is_active_bead(const Abacus& a, int b) {
  return runner_of(a.context(), b) != 0 && bead_at(a, b) && b > first_gap(a);
}

inline int symmetric_gap(const Abacus& a, int b) {
  if (!is_active_bead(a, b)) {
    throw Error(ErrorCode::NotActiveBead, "position " + std::to_string(b) + " is not an active bead");
  }
  return 2 * a.context().modulus() - b;
}

/// Positions from the first gap through the last bead, in reading order.
/// Everything before is a bead and everything after is a gap.
inline std::vector<int> reading_band(const Abacus& a) {
  std::vector<int> out;
  const int N = a.context().modulus();
  const int lo = first_gap(a);
  const int hi = last_bead(a);
  for (int p = lo; p <= hi; ++p) {
    if (detail::mod(p, N) != 0) out.push_back(p);
  }
  return out;
}

inline Abacus apply_generator_abacus(const Abacus& a, int g) {
  const auto& ctx = a.context();
  require_generator(ctx, g);
  const int n = ctx.rank();
  const int m = 2 * n;
  std::vector<int> lv(a.levels().begin(), a.levels().end());
  auto at = [&](int r) -> int& { return lv[r - 1]; };
  const auto old = lv;
  auto was = [&](int r) { return old[r - 1]; };

  if (g == 0) {
    if (uses_s0_D(ctx.family())) {
      at(1) = was(m - 1) + 1;
      at(2) = was(m) + 1;
      at(m - 1) = was(1) - 1;
      at(m) = was(2) - 1;
    } else {
      at(1) = was(m) + 1;
      at(m) = was(1) - 1;
    }
  } else if (g == n) {
    if (uses_sn_D(ctx.family())) {
      at(n - 1) = was(n + 1);
      at(n + 1) = was(n - 1);
      at(n) = was(n + 2);
      at(n + 2) = was(n);
    } else {
      std::swap(at(n), at(n + 1));
    }
  } else {
    std::swap(at(g), at(g + 1));
    std::swap(at(m - g), at(m - g + 1));
  }
  return abacus_unchecked(ctx, std::move(lv));
}

}  // namespace affine_abacus
