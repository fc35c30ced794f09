#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace affine_abacus;
using fixtures::cases;

TEST_CASE("root point of the C~3 example", "[root-lattice][golden]") {
  auto ctx = make_context(Family::CtildeOverC, 3);
  auto a = Abacus::from_levels(ctx, std::vector<int>{1, 2, -2, 2, -2, -1});
  CHECK(coordinates(a).coords == std::vector<int>{1, 2, -2});
  CHECK(from_coordinates(coordinates(a)) == a);
}

TEST_CASE("origin is the identity", "[root-lattice]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    CHECK(from_coordinates(make_root_point(ctx, std::vector<int>(c.n, 0))) == Abacus::identity(ctx));
  }
}

TEST_CASE("odd coordinate sum is rejected in even families", "[root-lattice]") {
  auto ctx = make_context(Family::DtildeOverD, 4);
  try {
    from_coordinates(make_root_point(ctx, {1, 0, 0, 0}));
    FAIL("expected a parity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityViolation);
  }
  CHECK_THROWS_AS(make_root_point(ctx, {1, 0}), Error);
}

TEST_CASE("all small points round trip", "[root-lattice]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    std::vector<int> v(c.n, -3);
    while (true) {
      int s = 0;
      for (int x : v) s += std::abs(x);
      if (s <= 6 && (!requires_even(c.family) || s % 2 == 0)) {
        auto pt = make_root_point(ctx, v);
        CHECK(coordinates(from_coordinates(pt)) == pt);
      }
      int k = 0;
      while (k < c.n && v[k] == 3) v[k++] = -3;
      if (k == c.n) break;
      ++v[k];
    }
  }
}

TEST_CASE("reflections match the abacus action", "[root-lattice][oracle]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    for (const auto& w : enumerate_quotient(ctx, 6).elements()) {
      auto a = from_permutation(w);
      for (int g = 0; g <= c.n; ++g) CHECK(reflect(coordinates(a), g) == coordinates(apply_generator_abacus(a, g)));
    }
  }
}
