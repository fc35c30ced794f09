#include <catch_amalgamated.hpp>

#include "brute.hpp"
#include "fixtures.hpp"

using namespace affine_abacus;
using fixtures::cases;

namespace {

ErrorCode window_error(const GroupContext& ctx, std::vector<int> w) {
  try {
    MirroredPermutation::from_base_window(ctx, w);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("base window validation", "[mirrored-perm][golden]") {
  auto c3 = make_context(Family::CtildeOverC, 3);
  CHECK_NOTHROW(MirroredPermutation::from_base_window(c3, std::vector<int>{-11, -9, -1, 8, 16, 18}));
  CHECK(MirroredPermutation::from_base_window(c3, std::vector<int>{1, 2, 3, 4, 5, 6}) ==
        MirroredPermutation::identity(c3));
  CHECK(window_error(c3, {1, 2, 3, 4, 5, 13}) == ErrorCode::BalanceViolation);
  CHECK(window_error(c3, {1, 2, 3, 4, 5}) == ErrorCode::WrongLength);
  CHECK(window_error(c3, {7, 2, 3, 4, 5, 0}) == ErrorCode::ZeroResidue);
  CHECK(window_error(c3, {1, 8, 3, 4, 5, 6}) == ErrorCode::ResidueClash);
}

TEST_CASE("evaluate uses periodicity and antisymmetry", "[mirrored-perm]") {
  auto c3 = make_context(Family::CtildeOverC, 3);
  auto w = MirroredPermutation::from_base_window(c3, std::vector<int>{-11, -9, -1, 8, 16, 18});
  CHECK(evaluate(w, 1) == -11);
  CHECK(evaluate(w, 8) == -4);
  CHECK(evaluate(w, -1) == 11);
  CHECK(evaluate(w, 0) == 0);
  CHECK(evaluate(w, 14) == 14);
  for (int k = -30; k <= 30; ++k) {
    CHECK(evaluate(w, k + 7) == evaluate(w, k) + 7);
    CHECK(evaluate(w, -k) == -evaluate(w, k));
    CHECK(evaluate(w, k) == brute::eval({-11, -9, -1, 8, 16, 18}, k));
  }
}

TEST_CASE("generators agree with the reference construction", "[mirrored-perm][oracle]") {
  for (Family f : kAllFamilies) {
    for (int n = minimum_rank(f); n <= 6; ++n) {
      auto ctx = make_context(f, n);
      for (int g = 0; g <= n; ++g) CHECK(generator_window(ctx, g) == brute::generator(f, n, g));
    }
  }
}

TEST_CASE("generators are involutions", "[mirrored-perm]") {
  for (Family f : kAllFamilies) {
    auto ctx = make_context(f, 4);
    auto e = MirroredPermutation::identity(ctx);
    for (int g = 0; g <= 4; ++g) CHECK(apply_generator_left(apply_generator_left(e, g), g) == e);
  }
}

TEST_CASE("braid relations hold on short elements", "[mirrored-perm][oracle]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    auto m = coxeter_matrix(ctx);
    auto table = enumerate_quotient(ctx, 6);
    for (const auto& w : table.elements()) {
      for (int i = 0; i <= c.n; ++i) {
        for (int j = i + 1; j <= c.n; ++j) {
          auto a = w;
          auto b = w;
          for (int k = 0; k < m[i][j]; ++k) {
            a = apply_generator_left(a, k % 2 == 0 ? i : j);
            b = apply_generator_left(b, k % 2 == 0 ? j : i);
          }
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("normalize picks the minimal representative", "[mirrored-perm][oracle]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    for (const auto& [key, coset] : brute::coset_lengths(c.family, c.n, 7)) {
      auto w = normalize(make_unchecked(ctx, coset.window));
      CHECK(is_minimal_coset_rep(w));
      CHECK(family_membership(w));
      CHECK(LengthTable::key_of(w) == key);
    }
  }
}

TEST_CASE("family membership parity", "[mirrored-perm]") {
  auto bb = make_context(Family::BtildeOverB, 3);
  auto cc = make_context(Family::CtildeOverC, 3);
  auto s0c = MirroredPermutation::from_base_window(cc, generator_window(cc, 0));
  CHECK(family_membership(s0c, cc));
  CHECK_FALSE(family_membership(s0c, bb));
  CHECK(family_membership(MirroredPermutation::identity(bb)));
}

TEST_CASE("descent classes of the D~5 example", "[mirrored-perm][golden]") {
  auto ctx = make_context(Family::DtildeOverD, 5);
  auto w = MirroredPermutation::from_base_window(ctx, std::vector<int>{-12, -7, -5, 2, 3, 8, 9, 16, 18, 23});
  CHECK(descent_class(w, 0) == DescentClass::Descent);
  CHECK(descent_class(w, 4) == DescentClass::Descent);
  CHECK(descent_class(w, 1) == DescentClass::Ascent);
  CHECK(descent_class(w, 3) == DescentClass::Ascent);
  CHECK(descent_class(w, 2) == DescentClass::Neither);
  CHECK(descent_class(w, 5) == DescentClass::Neither);
}

TEST_CASE("descent class matches length change", "[mirrored-perm][oracle]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    auto ref = brute::coset_lengths(c.family, c.n, 8);
    for (const auto& [key, coset] : ref) {
      if (coset.length >= 8) continue;
      auto w = normalize(make_unchecked(ctx, coset.window));
      for (int g = 0; g <= c.n; ++g) {
        const int after = ref.at(brute::coset_key(brute::left(brute::generator(c.family, c.n, g), coset.window))).length;
        const auto dc = descent_class(w, g);
        if (after < coset.length) CHECK(dc == DescentClass::Descent);
        if (after > coset.length) CHECK(dc == DescentClass::Ascent);
        if (after == coset.length) CHECK(dc == DescentClass::Neither);
      }
    }
  }
}

TEST_CASE("descent class rejects non-minimal windows", "[mirrored-perm]") {
  auto ctx = make_context(Family::CtildeOverC, 3);
  auto w = MirroredPermutation::from_base_window(ctx, std::vector<int>{2, 1, 3, 4, 6, 5});
  CHECK_THROWS_AS(descent_class(w, 1), Error);
}
