#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"

namespace affine_abacus {

/// Generator indices; the leftmost letter is applied last.
using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(w[k]);
  }
  return out;
}

struct BoundedPartition {
  GroupContext ctx;
  std::vector<int> parts;
  std::optional<int> star;  // index into parts

  friend bool operator==(const BoundedPartition&, const BoundedPartition&) = default;
};

/// "(5,5,4,2,1)"; the starred part carries a trailing asterisk.
inline std::string to_string(const BoundedPartition& b) {
  std::string out = "(";
  for (std::size_t k = 0; k < b.parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(b.parts[k]);
    if (b.star && *b.star == static_cast<int>(k)) out += '*';
  }
  return out + ")";
}

struct PeelStep {
  CorePartition before;
  BoxCoord box;
  int generator;
};

struct PeelResult {
  Word word;
  BoxSet boxes;
  std::map<BoxCoord, int> box_residue;
  std::vector<PeelStep> steps;
};

inline int reference_diagonal(Family f) { return uses_s0_D(f) ? 1 : 0; }

namespace detail {

inline int diagonal_count(const CorePartition& lam, int t) {
  int c = 0;
  while (c < lam.length() && lam.row(c + 1) >= c + 1 + t) ++c;
  return c;
}

inline bool removes_box(const CorePartition& lam, int g, BoxCoord b) {
  for (const auto& comp : generator_components(lam, g).removable) {
    if (comp.count(b)) return true;
  }
  return false;
}

}  // namespace detail

/// Central peeling: repeatedly strip the generator whose residue sits at the
/// end of the row through the reference diagonal.
inline PeelResult central_peel(const CorePartition& lam) {
  const auto& ctx = lam.context();
  const int n = ctx.rank();
  const int h = 2 * n;
  const int ref = reference_diagonal(ctx.family());
  PeelResult out;
  CorePartition cur = lam;
  while (!cur.is_empty()) {
    const int d = detail::diagonal_count(cur, ref);
    if (d == 0) throw Error(ErrorCode::StuckPeel, "reference diagonal is empty");
    const BoxCoord B{d, cur.row(d)};
    const auto res = residue(cur, B);

    std::vector<int> candidates;
    if (res.kind == ResidueValue::Kind::Fixed) candidates = {res.value};
    if (res.kind == ResidueValue::Kind::Double) candidates = {res.value, res.second};
    std::vector<int> working;
    for (int g : candidates) {
      if (detail::removes_box(cur, g, B)) working.push_back(g);
    }
    if (working.empty()) {
      throw Error(ErrorCode::StuckPeel, "no generator removes box (" + std::to_string(B.i) + "," +
                                            std::to_string(B.j) + ")");
    }
    int g = working.front();
    if (working.size() > 1) g = std::find(working.begin(), working.end(), n) != working.end() ? n : 0;

    auto next = apply_generator_core(cur, g);
    BoxCoord recorded = B;
    const int removed = cur.row(d) - next.row(d);
    if (removed == 2) {
      const BoxCoord other{d, cur.row(d) - 1};
      const int t = B.j - B.i;
      if (g == n && uses_sn_D(ctx.family()) && t == n) recorded = other;
      if (g == 0 && uses_s0_D(ctx.family()) && (t == 0 || t == h)) recorded = other;
    }
    out.word.push_back(g);
    out.boxes.insert(recorded);
    out.box_residue[recorded] = g;
    out.steps.push_back({cur, recorded, g});
    cur = std::move(next);
  }
  return out;
}

inline Word canonical_word(const CorePartition& lam) { return central_peel(lam).word; }

/// Row segments starting on the main diagonal whose lengths count the skew
/// boxes, with the offset diagonals removed.
inline BoxSet bounded_diagram(const CorePartition& lam) {
  const auto& ctx = lam.context();
  const int n = ctx.rank();
  const int h = 2 * n;
  BoxSet out;
  for (int i = 1; i <= lam.length() && lam.row(i) >= i; ++i) {
    int len = 1;
    for (int j = i + 1; j <= lam.row(i); ++j) {
      if (lam.hook(i, j) < h) ++len;
    }
    for (int j = i; j < i + len; ++j) {
      const int t = j - i;
      if (t == 0 && offset_x0(ctx.family()) != 0) continue;
      if (t == n && offset_xn(ctx.family()) != 0) continue;
      out.insert({i, j});
    }
  }
  return out;
}

namespace detail {

inline std::optional<int> starrable_size(const GroupContext& ctx) {
  switch (ctx.family()) {
    case Family::BtildeOverD: return ctx.rank();
    case Family::DtildeOverD: return ctx.rank() - 1;
    default: return std::nullopt;
  }
}

inline int part_cap(const GroupContext& ctx) {
  const int n = ctx.rank();
  switch (ctx.family()) {
    case Family::CtildeOverC: return 2 * n;
    case Family::BtildeOverB:
    case Family::BtildeOverD: return 2 * n - 1;
    case Family::DtildeOverD: return 2 * n - 2;
  }
  return 2 * n;
}

inline int distinct_bound(const GroupContext& ctx) {
  const int n = ctx.rank();
  switch (ctx.family()) {
    case Family::CtildeOverC: return n;
    case Family::BtildeOverB:
    case Family::BtildeOverD: return n - 1;
    case Family::DtildeOverD: return n - 2;
  }
  return n;
}

}  // namespace detail

inline BoundedPartition bounded_partition(const CorePartition& lam) {
  const auto& ctx = lam.context();
  const auto peel = central_peel(lam);
  std::map<int, int> counts;
  std::map<int, BoxCoord> rightmost;
  for (const auto& b : peel.boxes) {
    ++counts[b.i];
    rightmost[b.i] = b;  // set iterates in increasing j within a row
  }
  BoundedPartition out{ctx, {}, std::nullopt};
  std::vector<int> source_rows;
  for (const auto& [row, c] : counts) {
    out.parts.push_back(c);
    source_rows.push_back(row);
  }
  if (const auto size = detail::starrable_size(ctx)) {
    for (int k = static_cast<int>(out.parts.size()) - 1; k >= 0; --k) {
      if (out.parts[k] != *size) continue;
      if (peel.box_residue.at(rightmost.at(source_rows[k])) == ctx.rank() - 1) out.star = k;
      break;
    }
  }
  return out;
}

inline BoundedPartition bounded_from_abacus(const Abacus& a) {
  const auto& ctx = a.context();
  const int n = ctx.rank();
  const int N = ctx.modulus();
  const int x0 = offset_x0(ctx.family());
  const int xn = offset_xn(ctx.family());
  BoundedPartition out{ctx, {}, std::nullopt};
  const int top = last_bead(a);
  for (int b = top; b > N; --b) {
    if (runner_of(ctx, b) == 0 || !bead_at(a, b)) continue;
    int part = 0;
    if (b > N + n) {
      int gaps = 0;
      for (int p = b - N + 1; p < b; ++p) {
        if (runner_of(ctx, p) != 0 && !bead_at(a, p)) ++gaps;
      }
      part = gaps + 1 + x0 + xn;
    } else {
      part = b - N + x0;
    }
    if (part <= 0) continue;
    if (b == N + n && uses_sn_D(ctx.family())) out.star = static_cast<int>(out.parts.size());
    out.parts.push_back(part);
  }
  return out;
}

/// Table 5 structure checks; throws MalformedBounded.
inline void validate_bounded(const BoundedPartition& beta) {
  const auto& ctx = beta.ctx;
  const int cap = detail::part_cap(ctx);
  const int distinct = detail::distinct_bound(ctx);
  for (std::size_t k = 0; k < beta.parts.size(); ++k) {
    const int p = beta.parts[k];
    if (p <= 0) throw Error(ErrorCode::MalformedBounded, "parts must be positive");
    if (k > 0 && p > beta.parts[k - 1]) throw Error(ErrorCode::MalformedBounded, "parts must be weakly decreasing");
    if (p > cap) throw Error(ErrorCode::MalformedBounded, "part " + std::to_string(p) + " exceeds " + std::to_string(cap));
    if (k > 0 && p == beta.parts[k - 1] && p <= distinct) {
      throw Error(ErrorCode::MalformedBounded, "part " + std::to_string(p) + " may occur at most once");
    }
  }
  if (beta.star) {
    const auto size = detail::starrable_size(ctx);
    const int k = *beta.star;
    if (!size) throw Error(ErrorCode::MalformedBounded, "stars only exist in B~/D and D~/D");
    if (k < 0 || k >= static_cast<int>(beta.parts.size()) || beta.parts[k] != *size) {
      throw Error(ErrorCode::MalformedBounded, "only a part of size " + std::to_string(*size) + " may be starred");
    }
    if (k + 1 < static_cast<int>(beta.parts.size()) && beta.parts[k + 1] == *size) {
      throw Error(ErrorCode::MalformedBounded, "the star goes on the last part of its size");
    }
  }
}

/// Inverse of bounded_from_abacus: small parts become beads just past N, big
/// parts are threaded in from the smallest up.
inline Abacus abacus_from_bounded(const BoundedPartition& beta) {
  validate_bounded(beta);
  const auto& ctx = beta.ctx;
  const int n = ctx.rank();
  const int N = ctx.modulus();
  const int x0 = offset_x0(ctx.family());
  const int xn = offset_xn(ctx.family());

  std::vector<int> big;
  std::vector<int> small;
  for (std::size_t k = 0; k < beta.parts.size(); ++k) {
    const int p = beta.parts[k];
    const bool starred = beta.star && *beta.star == static_cast<int>(k);
    if (p >= n + 1 + x0 + xn && !starred) {
      big.push_back(p);
    } else {
      small.push_back(p);
    }
  }
  for (int p : small) {
    const bool starrable = uses_sn_D(ctx.family()) && p == n + x0;
    if (p > n + x0 || (starrable && !beta.star)) {
      throw Error(ErrorCode::MalformedBounded, "part " + std::to_string(p) + " cannot be placed");
    }
  }

  std::set<int> placed;
  for (int p : small) {
    if (!placed.insert(N + p - x0).second) throw Error(ErrorCode::MalformedBounded, "repeated small part");
  }
  if (requires_even(ctx.family()) && (big.size() + small.size()) % 2 == 1) placed.insert(N + 1);
  for (int j = 1; j <= n; ++j) {
    if (!placed.count(N + j)) placed.insert(N - j);
  }

  const int K = static_cast<int>(big.size());
  for (int i = K - 1; i >= 0; --i) {
    const int choice = (i == K - 1) ? big[i] - n - x0 - xn : big[i] - big[i + 1] + 1;
    int p = *placed.rbegin();
    int seen = 0;
    while (seen < choice) {
      ++p;
      if (runner_of(ctx, p) == 0) continue;
      const int above = p - N;
      if (above > n && placed.count(above)) ++seen;
    }
    placed.insert(p);
  }

  // Positions below N mirror the placed beads above N.
  auto is_bead = [&](int p) {
    if (p > N) return placed.count(p) > 0;
    return placed.count(2 * N - p) == 0;
  };
  const int h = ctx.window_size();
  std::vector<int> levels(h);
  const int hi_level = level_of(ctx, *placed.rbegin()) + 1;
  const int lo_level = -hi_level - 2;
  for (int r = 1; r <= h; ++r) {
    int lv = lo_level;
    bool in_gap = false;
    for (int m = lo_level; m <= hi_level; ++m) {
      const bool bead = is_bead(m * N + r);
      if (bead && in_gap) throw Error(ErrorCode::MalformedBounded, "bounded partition does not give a flush abacus");
      if (bead) lv = m;
      if (!bead) in_gap = true;
    }
    levels[r - 1] = lv;
  }
  auto a = Abacus::from_levels(ctx, levels);
  if (requires_even(ctx.family()) && !is_even(a)) {
    throw Error(ErrorCode::MalformedBounded, "bounded partition gives an odd abacus");
  }
  return a;
}

/// Residues of each box of beta, row by row.
inline std::vector<std::vector<int>> residue_filling(const BoundedPartition& beta) {
  validate_bounded(beta);
  const auto& ctx = beta.ctx;
  const int n = ctx.rank();
  const int rows = static_cast<int>(beta.parts.size());
  std::vector<std::vector<int>> grid(rows);
  for (int i = 0; i < rows; ++i) grid[i].assign(beta.parts[i], -1);

  auto alternate = [](int i) { return i % 2 == 0 ? 0 : 1; };  // i is 0-based

  // The flank column (n in B~/D, n-1 in D~/D) alternates upward from the
  // last row whose length equals that column.
  auto fill_flank = [&](int col) {
    int last = -1;
    for (int i = 0; i < rows; ++i) {
      if (beta.parts[i] == col) last = i;
    }
    int parity = 0;
    for (int i = rows - 1; i >= 0; --i) {
      if (beta.parts[i] < col) continue;
      if (beta.parts[i] > col) {
        grid[i][col - 1] = n - 1;
        continue;
      }
      if (i == last) {
        const bool starred = beta.star && *beta.star == i;
        grid[i][col - 1] = starred ? n - 1 : n;
        parity = starred ? 1 : 0;
      } else {
        parity ^= 1;
        grid[i][col - 1] = parity ? n - 1 : n;
      }
    }
  };

  for (int i = 0; i < rows; ++i) {
    for (int c = 1; c <= beta.parts[i]; ++c) {
      int r = -1;
      switch (ctx.family()) {
        case Family::CtildeOverC: r = c <= n + 1 ? c - 1 : 2 * n + 1 - c; break;
        case Family::BtildeOverB:
          if (c == 1 || c == 2 * n - 1) {
            r = alternate(i);
          } else {
            r = c <= n ? c : 2 * n - c;
          }
          break;
        case Family::BtildeOverD:
          if (c <= n - 1) r = c - 1;
          else if (c == n + 1) r = n;
          else if (c >= n + 2) r = 2 * n - c;
          break;
        case Family::DtildeOverD:
          if (c == 1 || c == 2 * n - 2) r = alternate(i);
          else if (c <= n - 2) r = c;
          else if (c == n) r = n;
          else if (c >= n + 1) r = 2 * n - c - 1;
          break;
      }
      grid[i][c - 1] = r;
    }
  }
  if (ctx.family() == Family::BtildeOverD) fill_flank(n);
  if (ctx.family() == Family::DtildeOverD) fill_flank(n - 1);
  return grid;
}

/// Reads a filling right to left in rows, bottom row first.
inline Word read_filling(const std::vector<std::vector<int>>& grid) {
  Word w;
  for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
    for (auto c = row->rbegin(); c != row->rend(); ++c) w.push_back(*c);
  }
  return w;
}

inline int length_from_abacus(const Abacus& a) {
  const auto& ctx = a.context();
  const int n = ctx.rank();
  const int N = ctx.modulus();
  const int x0 = offset_x0(ctx.family());
  const int xn = offset_xn(ctx.family());
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    const int B = std::max(a.lowest_bead(i), a.lowest_bead(N - i));
    const int runner = runner_of(ctx, B);
    const int b = runner <= n ? runner + N : runner;  // the runner's position in [n+1, N+n]
    for (int p = b + 1; p < B; ++p) {
      if (runner_of(ctx, p) != 0 && !bead_at(a, p)) ++total;
    }
  }
  for (int p = N + 1; p <= last_bead(a); ++p) {
    if (runner_of(ctx, p) == 0 || !bead_at(a, p)) continue;
    total += p > N + n ? 1 + x0 + xn : p - N + x0;
  }
  return total;
}

namespace detail {

inline int end_runner(const CorePartition& lam, int row) {
  return mod(lam.row(row) - row, lam.context().window_size()) + 1;
}

// Topmost row among the longest rows ending on runner i or N - i; 0 if none.
inline int longest_row_on(const CorePartition& lam, int i) {
  const int N = lam.context().modulus();
  int best = 0;
  for (int r = 1; r <= lam.length(); ++r) {
    const int run = end_runner(lam, r);
    if (run != i && run != N - i) continue;
    if (best == 0 || lam.row(r) > lam.row(best)) best = r;
  }
  return best;
}

}  // namespace detail

/// Pieces of the core length formula: for each i with a long row on runner
/// i or N - i, the long row and the short row it is measured against.
struct CoreLengthTerms {
  std::vector<int> long_row;   // index i-1; 0 when the runner pair has no row
  std::vector<int> short_row;
  int d = 0;                   // diagonal boxes with hook length > 2n
  int tail = 0;                // contribution of rows below d
  int total = 0;
};

inline CoreLengthTerms core_length_terms(const CorePartition& lam) {
  const auto& ctx = lam.context();
  const int n = ctx.rank();
  const int h = 2 * n;
  const int x0 = offset_x0(ctx.family());
  const int xn = offset_xn(ctx.family());
  CoreLengthTerms out;
  out.long_row.assign(n, 0);
  out.short_row.assign(n, 0);
  auto tail = [&](int from) {
    int s = 0;
    for (int i = from; i <= lam.length(); ++i) s += std::max(0, lam.row(i) - i + 1 + x0);
    return s;
  };
  if (lam.row(1) <= n) {
    out.tail = tail(1);
    out.total = out.tail;
    return out;
  }

  int total = 0;
  for (int i = 1; i <= n; ++i) {
    const int R = detail::longest_row_on(lam, i);
    if (R == 0) continue;
    const int run = detail::end_runner(lam, R);
    int small = 0;
    for (int r = 1; r <= lam.length(); ++r) {
      const int t = lam.row(r) - r;
      if (t >= -n && t <= n - 1 && detail::end_runner(lam, r) == run) small = lam.row(r);
    }
    out.long_row[i - 1] = lam.row(R);
    out.short_row[i - 1] = small;
    total += lam.row(R) - small;
  }
  for (int i = 1; i <= lam.length() && lam.row(i) >= i; ++i) {
    if (lam.hook(i, i) > h) ++out.d;
  }
  out.tail = tail(out.d + 1);
  out.total = total + (1 + x0 + xn) * out.d + out.tail;
  return out;
}

inline int length_from_core(const CorePartition& lam) { return core_length_terms(lam).total; }

/// Pieces of the rim-walk length formula.
struct RimWalkTerms {
  std::vector<int> height;  // h(i), index i-1
  int d0 = 0;               // boxes on diagonal 0
  int dn = 0;               // boxes on diagonal n
  int total = 0;
};

inline RimWalkTerms rimwalk_terms(const CorePartition& lam) {
  const auto& ctx = lam.context();
  const int n = ctx.rank();
  RimWalkTerms out;
  out.height.assign(n, 0);
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    const int R = detail::longest_row_on(lam, i);
    if (R == 0 || lam.row(R) - R < i - 1) continue;
    const int run = detail::end_runner(lam, R);
    std::set<int> rows;
    for (int t = lam.row(R) - R; t >= i - 1; --t) {
      int r = 0;
      while (r < lam.length() && lam.row(r + 1) >= r + 1 + t) ++r;
      rows.insert(r);
    }
    int height = 0;
    for (int r : rows) {
      if (detail::end_runner(lam, r) != run) ++height;
    }
    out.height[i - 1] = height;
    total += lam.row(R) - R - height + 1;
  }
  out.d0 = detail::diagonal_count(lam, 0);
  out.dn = detail::diagonal_count(lam, n);
  out.total = total + offset_x0(ctx.family()) * out.d0 + offset_xn(ctx.family()) * out.dn;
  return out;
}

inline int length_from_rimwalk(const CorePartition& lam) { return rimwalk_terms(lam).total; }

}  // namespace affine_abacus
