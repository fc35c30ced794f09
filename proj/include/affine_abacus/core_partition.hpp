#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"

namespace affine_abacus {

struct BoxCoord {
  int i;
  int j;
  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

using BoxSet = std::set<BoxCoord>;

/// A symmetric (2n)-core, stored as weakly decreasing row lengths.
class CorePartition {
 public:
  /// Validates shape, core property, symmetry and (in the even families)
  /// the parity of the main diagonal, in that order.
  static CorePartition from_rows(const GroupContext& ctx, std::vector<int> rows) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k] <= 0 || (k > 0 && rows[k] > rows[k - 1])) {
        throw Error(ErrorCode::NotAPartition, "rows must be positive and weakly decreasing");
      }
    }
    CorePartition lam(ctx, std::move(rows));
    const int h = ctx.window_size();
    for (int i = 1; i <= lam.length(); ++i) {
      for (int j = 1; j <= lam.row(i); ++j) {
        if (lam.hook(i, j) % h == 0) {
          throw Error(ErrorCode::NotACore, "box (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") has hook length divisible by " + std::to_string(h));
        }
      }
    }
    if (lam.conjugate() != lam.rows_) throw Error(ErrorCode::NotSymmetric, "partition is not self-conjugate");
    if (requires_even(ctx.family()) && lam.diagonal_count() % 2 != 0) {
      throw Error(ErrorCode::ParityViolation, "even families need an even number of diagonal boxes");
    }
    return lam;
  }

  static CorePartition empty(const GroupContext& ctx) { return CorePartition(ctx, {}); }

  const GroupContext& context() const noexcept { return ctx_; }
  const std::vector<int>& rows() const noexcept { return rows_; }
  int length() const noexcept { return static_cast<int>(rows_.size()); }
  int row(int i) const { return i >= 1 && i <= length() ? rows_[i - 1] : 0; }
  int column(int j) const {
    int c = 0;
    while (c < length() && rows_[c] >= j) ++c;
    return c;
  }
  bool has_box(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }

  int size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }

  int diagonal_count() const {
    int d = 0;
    while (d < length() && rows_[d] >= d + 1) ++d;
    return d;
  }

  std::vector<int> conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= row(1); ++j) out.push_back(column(j));
    return out;
  }

  int hook(int i, int j) const { return (row(i) - j) + (column(j) - i) + 1; }

  bool is_empty() const noexcept { return rows_.empty(); }

  friend bool operator==(const CorePartition& a, const CorePartition& b) {
    return a.ctx_ == b.ctx_ && a.rows_ == b.rows_;
  }

 private:
  CorePartition(GroupContext ctx, std::vector<int> rows) : ctx_(ctx), rows_(std::move(rows)) {}
  friend CorePartition core_unchecked(const GroupContext& ctx, std::vector<int> rows);

  GroupContext ctx_;
  std::vector<int> rows_;
};

inline CorePartition core_unchecked(const GroupContext& ctx, std::vector<int> rows) {
  return CorePartition(ctx, std::move(rows));
}

inline CorePartition make_core(const GroupContext& ctx, std::vector<int> rows) {
  return CorePartition::from_rows(ctx, std::move(rows));
}

inline int hook_length(const CorePartition& lam, BoxCoord b) {
  if (!lam.has_box(b.i, b.j)) {
    throw Error(ErrorCode::BoxOutside, "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ") is not in the diagram");
  }
  return lam.hook(b.i, b.j);
}

/// Reads the boundary path: a north step per active bead and an east step per
/// gap. Each active bead contributes a row equal to the gaps preceding it.
inline CorePartition from_abacus(const Abacus& a) {
  std::vector<int> rows;
  int gaps = 0;
  for (int p : reading_band(a)) {
    if (bead_at(a, p)) {
      rows.push_back(gaps);
    } else {
      ++gaps;
    }
  }
  std::reverse(rows.begin(), rows.end());
  return core_unchecked(a.context(), std::move(rows));
}

/// Inverse of from_abacus: the boundary path is laid on positions so that its
/// midpoint falls between N - 1 and N + 1.
inline Abacus to_abacus(const CorePartition& lam_in) {
  const auto lam = make_core(lam_in.context(), lam_in.rows());
  const auto& ctx = lam.context();
  const int N = ctx.modulus();
  const int h = ctx.window_size();
  const int k = lam.length();

  std::vector<bool> north;
  for (int i = k; i >= 1; --i) {
    north.insert(north.end(), lam.row(i) - lam.row(i + 1), false);
    north.push_back(true);
  }
  const int steps = static_cast<int>(north.size());

  auto position = [&](int t) { return N + detail::floor_div(t, h) * N + detail::mod(t, h) + 1; };
  std::vector<int> levels(h, 0);
  std::vector<bool> seen(h, false);
  for (int t = -k - h; t < steps - k; ++t) {
    const bool bead = t < -k || north[t + k];
    if (!bead) continue;
    const int p = position(t);
    const int r = runner_of(ctx, p);
    const int lv = level_of(ctx, p);
    if (!seen[r - 1] || lv > levels[r - 1]) levels[r - 1] = lv;
    seen[r - 1] = true;
  }
  return abacus_unchecked(ctx, std::move(levels));
}

/// Residue of a cell. Double cells carry two residues at once.
struct ResidueValue {
  enum class Kind { Fixed, Undetermined, Double };
  Kind kind = Kind::Undetermined;
  int value = 0;
  int second = 0;

  static ResidueValue fixed(int r) { return {Kind::Fixed, r, r}; }
  static ResidueValue undetermined() { return {}; }
  static ResidueValue both(int a, int b) { return {Kind::Double, a, b}; }

  bool has(int g) const {
    switch (kind) {
      case Kind::Fixed: return value == g;
      case Kind::Double: return value == g || second == g;
      case Kind::Undetermined: return false;
    }
    return false;
  }

  friend bool operator==(const ResidueValue&, const ResidueValue&) = default;
};

inline int fixed_residue(const GroupContext& ctx, int i, int j) {
  const int n = ctx.rank();
  const int d = detail::mod(j - i, 2 * n);
  return d <= n ? d : 2 * n - d;
}

namespace detail {

enum class Region { None, Main, UpperEscalator, UpperDescalator, LowerEscalator, LowerDescalator };

// Region of the active features a cell sits in, and the centre diagonal of its strip.
inline std::pair<Region, int> region_of(const GroupContext& ctx, int i, int j) {
  const int n = ctx.rank();
  const int h = 2 * n;
  const int delta = j - i;
  const int d = mod(delta, h);
  if (has_descalators(ctx.family())) {
    if (delta >= -1 && delta <= 1) return {Region::Main, 0};
    if (d == h - 1 || d == 0 || d == 1) {
      const int c = delta - (d == h - 1 ? -1 : d);
      return {delta > 0 ? Region::UpperDescalator : Region::LowerDescalator, c};
    }
  }
  if (has_escalators(ctx.family()) && (d == n - 1 || d == n || d == n + 1)) {
    const int c = delta - (d - n);
    return {delta > 0 ? Region::UpperEscalator : Region::LowerEscalator, c};
  }
  return {Region::None, 0};
}

// Upper-strip schematic: row length L, row i, strip centre c > 0, offset o.
inline ResidueValue upper_strip_residue(int L, int i, int c, int o, int lo, int hi) {
  const int start = i + c - 1;
  const int cnt = std::clamp(L - start + 1, 0, 3);
  const auto D = ResidueValue::both(std::min(lo, hi), std::max(lo, hi));
  const auto U = ResidueValue::undetermined();
  const auto F = [](int r) { return ResidueValue::fixed(r); };
  switch (cnt) {
    case 0:
      if (L != start - 1) return U;
      return o == -1 ? D : o == 0 ? F(hi) : U;
    case 1: return o == -1 ? F(lo) : F(hi);
    case 2: return o == 1 ? F(lo) : F(hi);
    default:
      if (L != start + 2) return U;
      return o == -1 ? U : o == 0 ? F(hi) : D;
  }
}

inline int main_residue(int i, int j) {
  if (i == j) return 0;
  return mod(i + j, 4) == 1 ? 1 : 0;
}

// How many of the cells (i, c-1..c+1) lie in row i of lam.
inline int strip_count(const CorePartition& lam, int i, int c) {
  int cnt = 0;
  for (int j = i + c - 1; j <= i + c + 1; ++j) {
    if (lam.has_box(i, j)) ++cnt;
  }
  return cnt;
}

}  // namespace detail

inline ResidueValue residue(const CorePartition& lam, BoxCoord b) {
  const auto& ctx = lam.context();
  const int n = ctx.rank();
  const auto [region, c] = detail::region_of(ctx, b.i, b.j);
  switch (region) {
    case detail::Region::None: return ResidueValue::fixed(fixed_residue(ctx, b.i, b.j));
    case detail::Region::Main: return ResidueValue::fixed(detail::main_residue(b.i, b.j));
    case detail::Region::UpperEscalator:
      return detail::upper_strip_residue(lam.row(b.i), b.i, c, b.j - b.i - c, n - 1, n);
    case detail::Region::UpperDescalator:
      return detail::upper_strip_residue(lam.row(b.i), b.i, c, b.j - b.i - c, 1, 0);
    // Lower strips are the transpose; column j of lam equals row j.
    case detail::Region::LowerEscalator:
      return detail::upper_strip_residue(lam.row(b.j), b.j, -c, b.i - b.j + c, n - 1, n);
    case detail::Region::LowerDescalator:
      return detail::upper_strip_residue(lam.row(b.j), b.j, -c, b.i - b.j + c, 1, 0);
  }
  return ResidueValue::undetermined();
}

namespace detail {

inline bool is_partition_shape(const std::vector<int>& rows) {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k] > rows[k - 1]) return false;
  }
  return true;
}

inline std::vector<int> rows_of(const BoxSet& boxes) {
  std::vector<int> rows;
  for (const auto& b : boxes) {
    if (static_cast<int>(rows.size()) < b.i) rows.resize(b.i, 0);
    ++rows[b.i - 1];
  }
  return rows;
}

inline BoxSet boxes_of(const CorePartition& lam) {
  BoxSet out;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.row(i); ++j) out.insert({i, j});
  }
  return out;
}

// A box set is a left-justified partition diagram.
inline bool is_diagram(const BoxSet& boxes) {
  for (const auto& b : boxes) {
    if (b.j > 1 && !boxes.count({b.i, b.j - 1})) return false;
    if (b.i > 1 && !boxes.count({b.i - 1, b.j})) return false;
  }
  return true;
}

inline std::vector<int> diagram_rows(const BoxSet& boxes) {
  auto rows = rows_of(boxes);
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

}  // namespace detail

/// The g-components of lam that are addable and removable.
struct GeneratorComponents {
  std::vector<BoxSet> addable;
  std::vector<BoxSet> removable;
};

inline GeneratorComponents generator_components(const CorePartition& lam, int g) {
  require_generator(lam.context(), g);
  const int margin = 4;
  const int rows = lam.length() + margin;
  const int cols = lam.row(1) + margin;
  const BoxSet diagram = detail::boxes_of(lam);

  std::vector<std::vector<char>> tagged(rows + 1, std::vector<char>(cols + 1, 0));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) tagged[i][j] = residue(lam, {i, j}).has(g) ? 1 : 0;
  }

  GeneratorComponents out;
  std::vector<std::vector<char>> visited(rows + 1, std::vector<char>(cols + 1, 0));
  for (int i0 = 1; i0 <= rows; ++i0) {
    for (int j0 = 1; j0 <= cols; ++j0) {
      if (!tagged[i0][j0] || visited[i0][j0]) continue;
      BoxSet comp;
      std::vector<BoxCoord> stack{{i0, j0}};
      visited[i0][j0] = 1;
      while (!stack.empty()) {
        const auto b = stack.back();
        stack.pop_back();
        comp.insert(b);
        const BoxCoord nbrs[] = {{b.i - 1, b.j}, {b.i + 1, b.j}, {b.i, b.j - 1}, {b.i, b.j + 1}};
        for (const auto& nb : nbrs) {
          if (nb.i < 1 || nb.j < 1 || nb.i > rows || nb.j > cols) continue;
          if (!tagged[nb.i][nb.j] || visited[nb.i][nb.j]) continue;
          visited[nb.i][nb.j] = 1;
          stack.push_back(nb);
        }
      }
      bool all_in = true;
      bool none_in = true;
      for (const auto& b : comp) {
        if (diagram.count(b)) {
          none_in = false;
        } else {
          all_in = false;
        }
      }
      if (none_in) {
        BoxSet grown = diagram;
        grown.insert(comp.begin(), comp.end());
        if (detail::is_diagram(grown)) out.addable.push_back(std::move(comp));
      } else if (all_in) {
        BoxSet shrunk = diagram;
        for (const auto& b : comp) shrunk.erase(b);
        if (detail::is_diagram(shrunk)) out.removable.push_back(std::move(comp));
      }
    }
  }
  return out;
}

/// Adds every addable g-component, or removes every removable one.
inline CorePartition apply_generator_core(const CorePartition& lam, int g) {
  const auto comps = generator_components(lam, g);
  BoxSet diagram = detail::boxes_of(lam);
  if (!comps.removable.empty()) {
    for (const auto& c : comps.removable) {
      for (const auto& b : c) diagram.erase(b);
    }
  } else {
    for (const auto& c : comps.addable) diagram.insert(c.begin(), c.end());
  }
  return core_unchecked(lam.context(), detail::diagram_rows(diagram));
}

namespace detail {

// Row-intersection clauses for one strip: a count of 1 in mu needs 1 or 3 in
// lam, 2 needs 2 or 3, and 3 needs 3.
inline bool strip_clause(int mu_count, int lam_count) {
  switch (mu_count) {
    case 0: return true;
    case 1: return lam_count == 1 || lam_count == 3;
    case 2: return lam_count == 2 || lam_count == 3;
    default: return lam_count == 3;
  }
}

}  // namespace detail

/// lam contains mu in the modified containment order.
inline bool contains(const CorePartition& lam, const CorePartition& mu) {
  const auto& ctx = lam.context();
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = 1; j <= mu.row(i); ++j) {
      if (detail::region_of(ctx, i, j).first == detail::Region::None && !lam.has_box(i, j)) return false;
    }
  }
  // Upper and main strips, row by row. Lower strips are their transposes
  // and the cores are symmetric.
  const int h = ctx.window_size();
  const int n = ctx.rank();
  for (int i = 1; i <= mu.length(); ++i) {
    std::vector<int> centres;
    if (has_descalators(ctx.family())) {
      centres.push_back(0);
      for (int c = h; i + c - 1 <= mu.row(i); c += h) centres.push_back(c);
    }
    if (has_escalators(ctx.family())) {
      for (int c = n; i + c - 1 <= mu.row(i); c += h) centres.push_back(c);
      
    }
    if (has_descalators(ctx.family())) {
      
    }
    for (int c : centres) {
      if (!detail::strip_clause(detail::strip_count(mu, i, c), detail::strip_count(lam, i, c))) return false;
    }
  }
  return true;
}

/// x <= w in Bruhat order, given their cores.
inline bool bruhat_leq(const CorePartition& x, const CorePartition& w) { return contains(w, x); }

}  // namespace affine_abacus
