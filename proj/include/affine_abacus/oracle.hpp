#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"
#include "affine_abacus/mirrored_permutation.hpp"

namespace affine_abacus {

/// Cayley-graph distances of minimal coset representatives from the identity.
/// Keys are sorted window entries, which identify a coset uniquely.
class LengthTable {
 public:
  struct Entry {
    std::vector<int> window;  // the minimal representative
    int length;
  };

  explicit LengthTable(GroupContext ctx) : ctx_(ctx) {}

  const GroupContext& context() const noexcept { return ctx_; }
  int max_length() const noexcept { return max_len_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::vector<int>, Entry>& entries() const noexcept { return entries_; }

  static std::vector<int> key_of(const MirroredPermutation& w) {
    std::vector<int> k(w.window().begin(), w.window().end());
    std::sort(k.begin(), k.end());
    return k;
  }

  bool contains(const MirroredPermutation& w) const { return entries_.count(key_of(w)) > 0; }

  int length(const MirroredPermutation& w) const {
    const auto it = entries_.find(key_of(w));
    if (it == entries_.end()) throw Error(ErrorCode::NotEnumerated, "element is not in the length table");
    return it->second.length;
  }

  /// Elements sorted by length, then lexicographically by window.
  std::vector<MirroredPermutation> elements() const {
    std::vector<const Entry*> ptrs;
    for (const auto& [k, e] : entries_) ptrs.push_back(&e);
    std::sort(ptrs.begin(), ptrs.end(), [](const Entry* a, const Entry* b) {
      return std::tie(a->length, a->window) < std::tie(b->length, b->window);
    });
    std::vector<MirroredPermutation> out;
    out.reserve(ptrs.size());
    for (const auto* e : ptrs) out.push_back(make_unchecked(ctx_, e->window));
    return out;
  }

  std::vector<std::size_t> counts_by_length() const {
    std::vector<std::size_t> c(max_len_ + 1, 0);
    for (const auto& [k, e] : entries_) ++c[e.length];
    return c;
  }

  void insert(const MirroredPermutation& w, int len) {
    entries_.emplace(key_of(w), Entry{std::vector<int>(w.window().begin(), w.window().end()), len});
    max_len_ = std::max(max_len_, len);
  }

 private:
  GroupContext ctx_;
  std::map<std::vector<int>, Entry> entries_;
  int max_len_ = 0;
};

/// Breadth-first search from the identity by left multiplication, normalizing
/// each neighbour back to its coset's minimal representative.
inline LengthTable enumerate_quotient(const GroupContext& ctx, int max_len) {
  LengthTable table(ctx);
  auto e = MirroredPermutation::identity(ctx);
  table.insert(e, 0);
  std::vector<MirroredPermutation> frontier{e};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<MirroredPermutation> next;
    for (const auto& w : frontier) {
      for (int g = 0; g <= ctx.rank(); ++g) {
        auto v = normalize(apply_generator_left(w, g));
        if (table.contains(v)) continue;
        table.insert(v, len);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return table;
}

/// Bruhat order on W~/W by the lifting property: with s a left descent of w,
/// x <= w iff min(x, s x) <= s w.
class BruhatOracle {
 public:
  explicit BruhatOracle(const LengthTable& table) : table_(table) {}

  bool leq(const MirroredPermutation& x, const MirroredPermutation& w) {
    const int lw = table_.length(w);
    const int lx = table_.length(x);
    if (lx > lw) return false;
    if (lw == 0) return lx == 0;
    const auto key = std::make_pair(LengthTable::key_of(x), LengthTable::key_of(w));
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto& ctx = table_.context();
    bool result = false;
    for (int g = 0; g <= ctx.rank(); ++g) {
      auto sw = normalize(apply_generator_left(w, g));
      if (!table_.contains(sw) || table_.length(sw) != lw - 1) continue;
      auto sx = normalize(apply_generator_left(x, g));
      const bool shorter = table_.contains(sx) && table_.length(sx) < lx;
      result = leq(shorter ? sx : x, sw);
      break;
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const LengthTable& table_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, bool> memo_;
};

inline bool bruhat_leq_lifting(const MirroredPermutation& x, const MirroredPermutation& w, const LengthTable& table) {
  BruhatOracle oracle(table);
  return oracle.leq(x, w);
}

}  // namespace affine_abacus
