#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"

namespace affine_abacus {

/// Point sum a_i e_i of the root lattice, i = 1..n.
struct RootPoint {
  GroupContext ctx;
  std::vector<int> coords;

  friend bool operator==(const RootPoint&, const RootPoint&) = default;
};

inline int abs_sum(const RootPoint& pt) {
  int s = 0;
  for (int a : pt.coords) s += std::abs(a);
  return s;
}

inline RootPoint make_root_point(const GroupContext& ctx, std::vector<int> coords) {
  if (static_cast<int>(coords.size()) != ctx.rank()) {
    throw Error(ErrorCode::WrongLength, "root point needs " + std::to_string(ctx.rank()) + " coordinates, got " +
                                            std::to_string(coords.size()));
  }
  return RootPoint{ctx, std::move(coords)};
}

inline RootPoint coordinates(const Abacus& a) {
  const int n = a.context().rank();
  return RootPoint{a.context(), std::vector<int>(a.levels().begin(), a.levels().begin() + n)};
}

inline Abacus from_coordinates(const RootPoint& pt) {
  const auto& ctx = pt.ctx;
  const int n = ctx.rank();
  const int N = ctx.modulus();
  if (static_cast<int>(pt.coords.size()) != n) {
    throw Error(ErrorCode::WrongLength, "root point needs " + std::to_string(n) + " coordinates");
  }
  if (requires_even(ctx.family()) && abs_sum(pt) % 2 != 0) {
    throw Error(ErrorCode::ParityViolation, "sum of |a_i| must be even in " + std::string(family_name(ctx.family())));
  }
  std::vector<int> levels(2 * n);
  for (int i = 1; i <= n; ++i) {
    levels[i - 1] = pt.coords[i - 1];
    levels[N - i - 1] = -pt.coords[i - 1];
  }
  return abacus_unchecked(ctx, std::move(levels));
}

namespace detail {

// Simple root for generator g as an integer vector on e_1..e_n, plus the
// affine shift c (1 for s0, 0 otherwise). s0 uses the highest root.
inline std::pair<std::vector<int>, int> simple_root(const GroupContext& ctx, int g) {
  const int n = ctx.rank();
  std::vector<int> alpha(n, 0);
  if (g == 0) {
    if (uses_s0_D(ctx.family())) {
      alpha[0] = 1;
      alpha[1] = 1;
    } else {
      alpha[0] = 2;
    }
    return {alpha, 1};
  }
  if (g == n) {
    if (uses_sn_D(ctx.family())) {
      alpha[n - 2] = 1;
      alpha[n - 1] = 1;
    } else {
      alpha[n - 1] = 1;
    }
    return {alpha, 0};
  }
  alpha[g - 1] = 1;
  alpha[g] = -1;
  return {alpha, 0};
}

}  // namespace detail

/// v - (<v, alpha> - c) * 2 alpha / <alpha, alpha>, exact over Z.
inline RootPoint reflect(const RootPoint& pt, int g) {
  require_generator(pt.ctx, g);
  const auto [alpha, c] = detail::simple_root(pt.ctx, g);
  int va = 0;
  int aa = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    va += pt.coords[i] * alpha[i];
    aa += alpha[i] * alpha[i];
  }
  RootPoint out = pt;
  for (std::size_t i = 0; i < alpha.size(); ++i) out.coords[i] -= (va - c) * 2 * alpha[i] / aa;
  return out;
}

}  // namespace affine_abacus
