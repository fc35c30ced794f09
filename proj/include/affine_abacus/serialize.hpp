#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"
#include "affine_abacus/mirrored_permutation.hpp"
#include "affine_abacus/oracle.hpp"
#include "affine_abacus/peeling.hpp"
#include "affine_abacus/root_lattice.hpp"

namespace affine_abacus {

using json = nlohmann::json;

inline json to_json(const GroupContext& ctx) {
  return json{{"family", std::string(family_name(ctx.family()))}, {"n", ctx.rank()}};
}

inline GroupContext context_from_json(const json& j) {
  try {
    const auto f = parse_family(j.at("family").get<std::string>());
    if (!f) throw Error(ErrorCode::ParseError, "unknown family " + j.at("family").dump());
    return make_context(*f, j.at("n").get<int>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline json to_json(const MirroredPermutation& w) {
  return json{{"ctx", to_json(w.context())}, {"window", std::vector<int>(w.window().begin(), w.window().end())}};
}

inline json to_json(const Abacus& a) {
  return json{{"ctx", to_json(a.context())}, {"levels", std::vector<int>(a.levels().begin(), a.levels().end())}};
}

inline json to_json(const RootPoint& pt) { return json{{"coords", pt.coords}}; }

inline json to_json(const CorePartition& lam) { return json{{"rows", lam.rows()}}; }

inline json word_to_json(const Word& w) { return json(w); }

inline json to_json(const BoundedPartition& b) {
  json j{{"parts", b.parts}, {"star", nullptr}};
  if (b.star) j["star"] = *b.star;
  return j;
}

inline json to_json(const LengthTable& t) {
  json entries = json::array();
  for (const auto& w : t.elements()) {
    entries.push_back(json{{"window", std::vector<int>(w.window().begin(), w.window().end())}, {"length", t.length(w)}});
  }
  return json{{"ctx", to_json(t.context())}, {"max_length", t.max_length()}, {"entries", entries}};
}

namespace detail {

inline std::vector<int> int_array(const json& j, const char* key) {
  try {
    return j.at(key).get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace detail

inline MirroredPermutation permutation_from_json(const json& j) {
  const auto w = detail::int_array(j, "window");
  return MirroredPermutation::from_base_window(context_from_json(j.at("ctx")), w);
}

inline Abacus abacus_from_json(const json& j) {
  const auto lv = detail::int_array(j, "levels");
  return Abacus::from_levels(context_from_json(j.at("ctx")), lv);
}

inline RootPoint root_from_json(const GroupContext& ctx, const json& j) {
  return make_root_point(ctx, detail::int_array(j, "coords"));
}

inline CorePartition core_from_json(const GroupContext& ctx, const json& j) {
  return CorePartition::from_rows(ctx, detail::int_array(j, "rows"));
}

inline BoundedPartition bounded_from_json(const GroupContext& ctx, const json& j) {
  BoundedPartition b{ctx, detail::int_array(j, "parts"), std::nullopt};
  if (j.contains("star") && !j.at("star").is_null()) b.star = j.at("star").get<int>();
  validate_bounded(b);
  return b;
}

}  // namespace affine_abacus
