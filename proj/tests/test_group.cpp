#include <catch_amalgamated.hpp>

#include "affine_abacus/group.hpp"

using namespace affine_abacus;

TEST_CASE("context stores rank and modulus", "[group]") {
  auto c = make_context(Family::CtildeOverC, 3);
  CHECK(c.rank() == 3);
  CHECK(c.modulus() == 7);
  CHECK(c.window_size() == 6);
  CHECK(make_context(Family::DtildeOverD, 5).modulus() == 11);
}

TEST_CASE("rank minima", "[group]") {
  auto code = [](Family f, int n) {
    try {
      make_context(f, n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code(Family::DtildeOverD, 2) == ErrorCode::RankTooSmall);
  CHECK(code(Family::DtildeOverD, 3) == ErrorCode::RankTooSmall);
  CHECK(code(Family::BtildeOverB, 2) == ErrorCode::RankTooSmall);
  CHECK(code(Family::BtildeOverD, 2) == ErrorCode::RankTooSmall);
  CHECK(code(Family::CtildeOverC, 1) == ErrorCode::RankTooSmall);
  CHECK_NOTHROW(make_context(Family::CtildeOverC, 2));
  CHECK_NOTHROW(make_context(Family::BtildeOverB, 3));
  CHECK_NOTHROW(make_context(Family::BtildeOverD, 3));
  CHECK_NOTHROW(make_context(Family::DtildeOverD, 4));
}

TEST_CASE("family names round trip", "[group]") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("DD") == Family::DtildeOverD);
  CHECK_FALSE(parse_family("A~").has_value());
}

TEST_CASE("coxeter matrix of C~3", "[group][golden]") {
  auto m = coxeter_matrix(make_context(Family::CtildeOverC, 3));
  CHECK(m[0][1] == 4);
  CHECK(m[1][2] == 3);
  CHECK(m[2][3] == 4);
  CHECK(m[0][2] == 2);
  for (int i = 0; i <= 3; ++i) CHECK(m[i][i] == 1);
}

TEST_CASE("coxeter matrix of D~4 has forks at both ends", "[group][golden]") {
  auto m = coxeter_matrix(make_context(Family::DtildeOverD, 4));
  CHECK(m[0][2] == 3);
  CHECK(m[1][2] == 3);
  CHECK(m[0][1] == 2);
  CHECK(m[2][4] == 3);
  CHECK(m[3][4] == 2);
  CHECK(m[2][3] == 3);
}

TEST_CASE("coxeter matrix is symmetric", "[group]") {
  for (Family f : kAllFamilies) {
    auto ctx = make_context(f, 5);
    auto m = coxeter_matrix(ctx);
    for (int i = 0; i <= 5; ++i) {
      for (int j = 0; j <= 5; ++j) CHECK(m[i][j] == m[j][i]);
    }
  }
}
