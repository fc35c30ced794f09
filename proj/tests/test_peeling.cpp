#include <catch_amalgamated.hpp>

#include <set>

#include "brute.hpp"
#include "fixtures.hpp"

using namespace affine_abacus;
using fixtures::cases;
using fixtures::core_of;

TEST_CASE("canonical word of the C~3 example", "[peeling][golden]") {
  auto ctx = make_context(Family::CtildeOverC, 3);
  auto lam = CorePartition::from_rows(ctx, {10, 9, 6, 5, 5, 3, 2, 2, 2, 1});
  CHECK(word_to_string(canonical_word(lam)) == "s0 s1 s0 s3 s2 s1 s0 s2 s3 s2 s1 s0 s2 s3 s2 s1 s0");
  CHECK(bounded_partition(lam).parts == std::vector<int>{5, 5, 4, 2, 1});
  CHECK(bounded_from_abacus(to_abacus(lam)) == bounded_partition(lam));
  CHECK(abacus_from_bounded(bounded_partition(lam)) == to_abacus(lam));
  CHECK(length_from_core(lam) == 17);
  CHECK(length_from_rimwalk(lam) == 17);
  CHECK(length_from_abacus(to_abacus(lam)) == 17);
}

TEST_CASE("canonical word of the D~4 figure core", "[peeling][golden]") {
  auto ctx = make_context(Family::DtildeOverD, 4);
  auto lam = CorePartition::from_rows(ctx, {13, 11, 11, 8, 6, 6, 4, 4, 3, 3, 3, 1, 1});
  CHECK(word_to_string(canonical_word(lam)) == "s0 s4 s2 s1 s4 s3 s2 s0 s4 s3 s2 s1 s4 s3 s2 s0");
  CHECK(central_peel(lam).steps.size() == 16);
}

TEST_CASE("length terms of the B~3/D3 example", "[peeling][golden]") {
  auto ctx = make_context(Family::BtildeOverD, 3);
  auto lam = CorePartition::from_rows(ctx, {12, 12, 8, 8, 7, 5, 5, 4, 2, 2, 2, 2});
  auto t = core_length_terms(lam);
  CHECK(t.long_row[0] == 12);
  CHECK(t.short_row[0] == 5);
  CHECK(t.d == 4);
  CHECK(t.total == 17);
  auto r = rimwalk_terms(lam);
  CHECK(r.height == std::vector<int>{3, 2, 0});
  CHECK(r.dn == 4);
  CHECK(r.total == 17);
  CHECK(canonical_word(lam).size() == 17);
}

TEST_CASE("filling of the D~5 bounded partition", "[peeling][golden]") {
  auto ctx = make_context(Family::DtildeOverD, 5);
  BoundedPartition beta{ctx, {8, 8, 5, 5, 5, 4, 2}, std::nullopt};
  const Word expect = {2, 0, 5, 3, 2, 1, 5, 4, 3, 2, 0, 5, 4, 3, 2, 1, 5, 4, 3, 2, 0, 1, 2, 3, 5, 4, 3, 2, 1, 0, 2, 3, 5, 4, 3, 2, 0};
  auto word = read_filling(residue_filling(beta));
  CHECK(word == expect);
  CHECK(word == canonical_word(from_abacus(abacus_from_bounded(beta))));
}

TEST_CASE("empty and identity cases", "[peeling]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    auto e = CorePartition::empty(ctx);
    CHECK(canonical_word(e).empty());
    CHECK(bounded_partition(e).parts.empty());
    CHECK(length_from_core(e) == 0);
    CHECK(length_from_rimwalk(e) == 0);
    CHECK(length_from_abacus(Abacus::identity(ctx)) == 0);
    CHECK(bounded_diagram(e).empty());
  }
}

TEST_CASE("malformed bounded partitions", "[peeling]") {
  auto ctx = make_context(Family::CtildeOverC, 3);
  auto code = [](const BoundedPartition& b) {
    try {
      validate_bounded(b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code({ctx, {1, 2}, std::nullopt}) == ErrorCode::MalformedBounded);
  CHECK(code({ctx, {9}, std::nullopt}) == ErrorCode::MalformedBounded);
  CHECK(code({ctx, {2, 1}, 0}) == ErrorCode::MalformedBounded);
}

TEST_CASE("peeling laws on every short element", "[peeling][oracle]") {
  for (const auto& c : cases()) {
    auto ctx = make_context(c.family, c.n);
    auto ref = brute::coset_lengths(c.family, c.n, 8);
    std::set<BoundedPartition, bool (*)(const BoundedPartition&, const BoundedPartition&)> seen(
        [](const BoundedPartition& a, const BoundedPartition& b) { return std::tie(a.parts, a.star) < std::tie(b.parts, b.star); });
    for (const auto& [key, coset] : ref) {
      auto w = normalize(make_unchecked(ctx, coset.window));
      auto a = from_permutation(w);
      auto lam = from_abacus(a);
      auto peel = central_peel(lam);
      CAPTURE(family_name(c.family), c.n, lam.rows());

      // word length, the three formulas and the search depth
      CHECK(static_cast<int>(peel.word.size()) == coset.length);
      CHECK(length_from_abacus(a) == coset.length);
      CHECK(length_from_core(lam) == coset.length);
      CHECK(length_from_rimwalk(lam) == coset.length);

      // the word rebuilds the core
      auto rebuilt = CorePartition::empty(ctx);
      for (auto it = peel.word.rbegin(); it != peel.word.rend(); ++it) rebuilt = apply_generator_core(rebuilt, *it);
      CHECK(rebuilt == lam);
      CHECK(brute::below(c.family, c.n, peel.word).count(key) == 1);

      CHECK(bounded_diagram(lam) == peel.boxes);

      auto beta = bounded_partition(lam);
      CHECK_NOTHROW(validate_bounded(beta));
      CHECK(beta == bounded_from_abacus(a));
      CHECK(abacus_from_bounded(beta) == a);
      CHECK(seen.insert(beta).second);
      CHECK(read_filling(residue_filling(beta)) == peel.word);
    }
  }
}
