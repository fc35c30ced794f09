#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affine_abacus/error.hpp"

namespace affine_abacus {

/// The four parabolic quotients W~/W realized inside the mirrored
/// permutations of Z.
enum class Family {
  CtildeOverC,
  BtildeOverB,
  BtildeOverD,
  DtildeOverD,
};

inline constexpr Family kAllFamilies[] = {Family::CtildeOverC, Family::BtildeOverB,
                                          Family::BtildeOverD, Family::DtildeOverD};

inline constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::CtildeOverC: return "C~/C";
    case Family::BtildeOverB: return "B~/B";
    case Family::BtildeOverD: return "B~/D";
    case Family::DtildeOverD: return "D~/D";
  }
  return "?";
}

/// Accepts the canonical names ("C~/C") and the short forms "CC", "BB", "BD", "DD".
inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : kAllFamilies) {
    if (s == family_name(f)) return f;
  }
  if (s == "CC" || s == "cc") return Family::CtildeOverC;
  if (s == "BB" || s == "bb") return Family::BtildeOverB;
  if (s == "BD" || s == "bd") return Family::BtildeOverD;
  if (s == "DD" || s == "dd") return Family::DtildeOverD;
  return std::nullopt;
}

// s0 is the type-D generator (fork on the left of the Coxeter graph).
inline constexpr bool uses_s0_D(Family f) {
  return f == Family::BtildeOverB || f == Family::DtildeOverD;
}

// sn is the type-D generator (fork on the right of the Coxeter graph).
inline constexpr bool uses_sn_D(Family f) {
  return f == Family::BtildeOverD || f == Family::DtildeOverD;
}

// Families whose abaci, cores and root points carry an evenness constraint.
inline constexpr bool requires_even(Family f) { return uses_s0_D(f); }

inline constexpr bool has_descalators(Family f) { return uses_s0_D(f); }
inline constexpr bool has_escalators(Family f) { return uses_sn_D(f); }

inline constexpr int offset_x0(Family f) { return uses_s0_D(f) ? -1 : 0; }
inline constexpr int offset_xn(Family f) { return uses_sn_D(f) ? -1 : 0; }

inline constexpr int minimum_rank(Family f) {
  switch (f) {
    case Family::CtildeOverC: return 2;
    case Family::BtildeOverB:
    case Family::BtildeOverD: return 3;
    case Family::DtildeOverD: return 4;
  }
  return 2;
}

/// Family plus rank n. Immutable; every other module takes one of these.
class GroupContext {
 public:
  static GroupContext make(Family family, int n) {
    if (n < minimum_rank(family)) {
      throw Error(ErrorCode::RankTooSmall, std::string(family_name(family)) + " needs n >= " +
                                               std::to_string(minimum_rank(family)) + ", got " +
                                               std::to_string(n));
    }
    return GroupContext(family, n);
  }

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return n_; }
  int modulus() const noexcept { return 2 * n_ + 1; }
  int window_size() const noexcept { return 2 * n_; }

  bool is_generator(int g) const noexcept { return g >= 0 && g <= n_; }

  friend bool operator==(const GroupContext&, const GroupContext&) = default;

 private:
  GroupContext(Family family, int n) : family_(family), n_(n) {}

  Family family_;
  int n_;
};

inline GroupContext make_context(Family family, int n) { return GroupContext::make(family, n); }

inline void require_generator(const GroupContext& ctx, int g) {
  if (!ctx.is_generator(g)) {
    throw Error(ErrorCode::ParseError, "generator s" + std::to_string(g) + " is not in the alphabet 0.." +
                                           std::to_string(ctx.rank()));
  }
}

/// Bond orders m(i, j) of the Coxeter graph, indexed 0..n in both coordinates.
inline std::vector<std::vector<int>> coxeter_matrix(const GroupContext& ctx) {
  const int n = ctx.rank();
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 2));
  auto bond = [&](int i, int j, int order) {
    m[i][j] = order;
    m[j][i] = order;
  };
  for (int i = 0; i <= n; ++i) m[i][i] = 1;

  // Chain s1 - s2 - ... - s_{n-1} is common to every family.
  for (int i = 1; i + 1 <= n - 1; ++i) bond(i, i + 1, 3);

  if (uses_s0_D(ctx.family())) {
    bond(0, 2, 3);
  } else {
    bond(0, 1, 4);
  }
  if (uses_sn_D(ctx.family())) {
    bond(n - 2, n, 3);
  } else {
    bond(n - 1, n, 4);
  }
  return m;
}

}  // namespace affine_abacus
