#pragma once

#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"
#include "affine_abacus/mirrored_permutation.hpp"
#include "affine_abacus/peeling.hpp"
#include "affine_abacus/root_lattice.hpp"
#include "affine_abacus/serialize.hpp"

namespace affine_abacus {

enum class Representation { Window, Levels, Core, Bounded, Word, Root };

inline constexpr Representation kAllRepresentations[] = {Representation::Window, Representation::Levels,
                                                         Representation::Core,   Representation::Bounded,
                                                         Representation::Word,   Representation::Root};

inline constexpr std::string_view representation_name(Representation r) {
  switch (r) {
    case Representation::Window: return "window";
    case Representation::Levels: return "levels";
    case Representation::Core: return "core";
    case Representation::Bounded: return "bounded";
    case Representation::Word: return "word";
    case Representation::Root: return "root";
  }
  return "?";
}

inline std::optional<Representation> parse_representation(std::string_view s) {
  for (auto r : kAllRepresentations) {
    if (s == representation_name(r)) return r;
  }
  return std::nullopt;
}

/// One element of W~/W in any of the six representations.
struct ElementDescriptor {
  using Value = std::variant<MirroredPermutation, Abacus, CorePartition, BoundedPartition, Word, RootPoint>;
  GroupContext ctx;
  Value value;

  Representation kind() const { return static_cast<Representation>(value.index()); }
};

namespace detail {

// Integers in order of appearance; brackets, commas and spaces are separators.
inline std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < s.size()) {
    const char c = s[k];
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = k + 1;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      const auto tok = std::string(s.substr(k, end - k));
      if (tok == "-" || tok == "+") throw Error(ErrorCode::ParseError, "stray sign in \"" + std::string(s) + "\"");
      out.push_back(std::stoi(tok));
      k = end;
    } else if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else {
      throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, c) + "' in \"" + std::string(s) + "\"");
    }
  }
  return out;
}

inline std::string join(const std::vector<int>& v, const char* open, const char* close) {
  std::string out = open;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + close;
}

inline BoundedPartition parse_bounded(const GroupContext& ctx, std::string_view s) {
  BoundedPartition b{ctx, {}, std::nullopt};
  std::string cleaned;
  for (char c : s) {
    if (c == '*') {
      if (b.star) throw Error(ErrorCode::ParseError, "at most one starred part");
      b.star = static_cast<int>(parse_ints(cleaned).size()) - 1;
      if (*b.star < 0) throw Error(ErrorCode::ParseError, "star before any part");
      continue;
    }
    cleaned += c;
  }
  b.parts = parse_ints(cleaned);
  validate_bounded(b);
  return b;
}

inline Word parse_word(const GroupContext& ctx, std::string_view s) {
  std::string cleaned;
  for (char c : s) cleaned += (c == 's' || c == 'S') ? ' ' : c;
  if (cleaned.find_first_not_of(" e") == std::string::npos) return {};
  Word w = parse_ints(cleaned);
  for (int g : w) require_generator(ctx, g);
  return w;
}

}  // namespace detail

inline std::string format_value(const ElementDescriptor& el) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MirroredPermutation>) {
          return detail::join(std::vector<int>(v.window().begin(), v.window().end()), "[", "]");
        } else if constexpr (std::is_same_v<T, Abacus>) {
          return detail::join(std::vector<int>(v.levels().begin(), v.levels().end()), "(", ")");
        } else if constexpr (std::is_same_v<T, CorePartition>) {
          return detail::join(v.rows(), "(", ")");
        } else if constexpr (std::is_same_v<T, BoundedPartition>) {
          return to_string(v);
        } else if constexpr (std::is_same_v<T, Word>) {
          return v.empty() ? std::string("e") : word_to_string(v);
        } else {
          return detail::join(v.coords, "(", ")");
        }
      },
      el.value);
}

/// Minimal coset representative described by a word, checking the word is reduced.
inline MirroredPermutation permutation_from_word(const GroupContext& ctx, const Word& w) {
  auto e = MirroredPermutation::identity(ctx);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e = apply_generator_left(e, *it);
  e = normalize(e);
  if (length_from_abacus(from_permutation(e)) != static_cast<int>(w.size())) {
    throw Error(ErrorCode::NotMinimal, "\"" + word_to_string(w) + "\" is not a reduced word for a coset representative");
  }
  return e;
}

inline MirroredPermutation checked_window(const GroupContext& ctx, std::span<const int> entries) {
  auto w = MirroredPermutation::from_base_window(ctx, entries);
  if (!family_membership(w, ctx)) {
    throw Error(ErrorCode::ParityViolation, "window is not in " + std::string(family_name(ctx.family())));
  }
  if (!is_minimal_coset_rep(w)) throw Error(ErrorCode::NotMinimal, "window is not a minimal coset representative");
  return w;
}

inline ElementDescriptor parse_element(const GroupContext& ctx, Representation r, std::string_view text) {
  switch (r) {
    case Representation::Window: {
      const auto v = detail::parse_ints(text);
      return {ctx, checked_window(ctx, v)};
    }
    case Representation::Levels: {
      const auto v = detail::parse_ints(text);
      auto a = Abacus::from_levels(ctx, v);
      if (requires_even(ctx.family()) && !is_even(a)) {
        throw Error(ErrorCode::ParityViolation, std::string(family_name(ctx.family())) + " needs an even abacus");
      }
      return {ctx, a};
    }
    case Representation::Core: return {ctx, CorePartition::from_rows(ctx, detail::parse_ints(text))};
    case Representation::Bounded: return {ctx, detail::parse_bounded(ctx, text)};
    case Representation::Word: {
      auto w = detail::parse_word(ctx, text);
      permutation_from_word(ctx, w);
      return {ctx, w};
    }
    case Representation::Root: {
      auto pt = make_root_point(ctx, detail::parse_ints(text));
      from_coordinates(pt);
      return {ctx, pt};
    }
  }
  throw Error(ErrorCode::ParseError, "unknown representation");
}

/// Every representation passes through the abacus.
inline Abacus to_abacus(const ElementDescriptor& el) {
  return std::visit(
      [&](const auto& v) -> Abacus {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MirroredPermutation>) {
          return from_permutation(v);
        } else if constexpr (std::is_same_v<T, Abacus>) {
          return v;
        } else if constexpr (std::is_same_v<T, CorePartition>) {
          return to_abacus(v);
        } else if constexpr (std::is_same_v<T, BoundedPartition>) {
          return abacus_from_bounded(v);
        } else if constexpr (std::is_same_v<T, Word>) {
          return from_permutation(permutation_from_word(el.ctx, v));
        } else {
          return from_coordinates(v);
        }
      },
      el.value);
}

inline ElementDescriptor convert(const ElementDescriptor& el, Representation target) {
  if (el.kind() == target) return el;
  const auto a = to_abacus(el);
  switch (target) {
    case Representation::Window: return {el.ctx, to_permutation(a)};
    case Representation::Levels: return {el.ctx, a};
    case Representation::Core: return {el.ctx, from_abacus(a)};
    case Representation::Bounded:
      // from the core side, so the star agrees with the peel
      return {el.ctx, el.kind() == Representation::Core ? bounded_partition(std::get<CorePartition>(el.value))
                                                        : bounded_partition(from_abacus(a))};
    case Representation::Word:
      return {el.ctx, el.kind() == Representation::Core ? canonical_word(std::get<CorePartition>(el.value))
                                                        : canonical_word(from_abacus(a))};
    case Representation::Root: return {el.ctx, coordinates(a)};
  }
  throw Error(ErrorCode::ParseError, "unknown representation");
}

/// One JSON object carrying all six representations.
inline json describe(const MirroredPermutation& w) {
  const auto a = from_permutation(w);
  const auto lam = from_abacus(a);
  json j = to_json(w);
  j["levels"] = std::vector<int>(a.levels().begin(), a.levels().end());
  j["root"] = coordinates(a).coords;
  j["core"] = lam.rows();
  j["bounded"] = to_json(bounded_partition(lam));
  const auto word = canonical_word(lam);
  j["word"] = word_to_json(word);
  j["length"] = static_cast<int>(word.size());
  return j;
}

}  // namespace affine_abacus
