#pragma once

#include <vector>

#include "affine_abacus.hpp"

namespace fixtures {

using namespace affine_abacus;

struct Case {
  Family family;
  int n;
};

// One rank per family at the bottom of its range, plus C~2.
inline const std::vector<Case>& cases() {
  static const std::vector<Case> all = {{Family::CtildeOverC, 2},
                                        {Family::CtildeOverC, 3},
                                        {Family::BtildeOverB, 3},
                                        {Family::BtildeOverD, 3},
                                        {Family::DtildeOverD, 4}};
  return all;
}

inline CorePartition core_of(const MirroredPermutation& w) { return from_abacus(from_permutation(w)); }

inline MirroredPermutation product(const GroupContext& ctx, const Word& word) {
  auto e = MirroredPermutation::identity(ctx);
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = apply_generator_left(e, *it);
  return normalize(e);
}

}  // namespace fixtures
