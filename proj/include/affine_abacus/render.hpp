#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/error.hpp"
#include "affine_abacus/peeling.hpp"

namespace affine_abacus {

enum class RenderTarget { Abacus, Core, Bounded, PeelTrace };
enum class RenderFormat { Text, Svg };

inline std::optional<RenderTarget> parse_render_target(std::string_view s) {
  if (s == "abacus") return RenderTarget::Abacus;
  if (s == "core") return RenderTarget::Core;
  if (s == "bounded") return RenderTarget::Bounded;
  if (s == "peel-trace") return RenderTarget::PeelTrace;
  return std::nullopt;
}

inline std::optional<RenderFormat> parse_render_format(std::string_view s) {
  if (s == "text") return RenderFormat::Text;
  if (s == "svg") return RenderFormat::Svg;
  return std::nullopt;
}

inline constexpr std::string_view kEmptyDiagram = "(empty)\n";

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const std::size_t left = (width - s.size() + 1) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

inline std::string residue_label(const ResidueValue& r) {
  switch (r.kind) {
    case ResidueValue::Kind::Fixed: return std::to_string(r.value);
    case ResidueValue::Kind::Double: return std::to_string(r.value) + "/" + std::to_string(r.second);
    case ResidueValue::Kind::Undetermined: return "?";
  }
  return "?";
}

// Text grid of boxes; label(i, j) gives the box content, row_suffix(i) a trailer.
template <class Label, class Suffix>
std::string box_grid(const std::vector<int>& rows, Label label, Suffix row_suffix) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 1; j <= rows[i]; ++j) width = std::max(width, label(static_cast<int>(i) + 1, j).size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line = "|";
    for (int j = 1; j <= rows[i]; ++j) line += pad(label(static_cast<int>(i) + 1, j), width) + "|";
    os << line << row_suffix(static_cast<int>(i) + 1) << "\n";
  }
  return os.str();
}

inline std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" font-family=\"monospace\" font-size=\"12\">\n";
}

inline std::string svg_box(int x, int y, int size, const std::string& fill, const std::string& label) {
  std::string s = "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
                  std::to_string(size) + "\" height=\"" + std::to_string(size) + "\" fill=\"" + fill +
                  "\" stroke=\"black\"/>\n";
  if (!label.empty()) {
    s += "<text x=\"" + std::to_string(x + size / 2) + "\" y=\"" + std::to_string(y + size / 2 + 4) +
         "\" text-anchor=\"middle\">" + label + "</text>\n";
  }
  return s;
}

template <class Label, class Fill>
std::string svg_grid(const std::vector<int>& rows, Label label, Fill fill) {
  constexpr int cell = 28;
  const int w = (rows.empty() ? 1 : rows.front()) * cell + 2;
  const int h = static_cast<int>(rows.size()) * cell + 2;
  std::string s = svg_open(w, h);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 1; j <= rows[i]; ++j) {
      const int r = static_cast<int>(i) + 1;
      s += svg_box(1 + (j - 1) * cell, 1 + static_cast<int>(i) * cell, cell, fill(r, j), label(r, j));
    }
  }
  return s + "</svg>\n";
}

inline std::string region_fill(const GroupContext& ctx, int i, int j) {
  switch (region_of(ctx, i, j).first) {
    case Region::None: return "white";
    case Region::UpperEscalator:
    case Region::LowerEscalator: return "lightgray";
    default: return "lightblue";
  }
}

}  // namespace detail

/// Runners as columns, levels as rows; beads in parentheses.
inline std::string render_abacus(const Abacus& a, RenderFormat fmt) {
  if (a == Abacus::identity(a.context())) return std::string(kEmptyDiagram);
  const auto& ctx = a.context();
  const int h = ctx.window_size();
  const int N = ctx.modulus();
  const auto [lo_it, hi_it] = std::minmax_element(a.levels().begin(), a.levels().end());
  const int lo = *lo_it;
  const int hi = *hi_it + 1;
  std::size_t width = 0;
  for (int m = lo; m <= hi; ++m) {
    width = std::max({width, std::to_string(m * N + 1).size() + 2, std::to_string(m * N + h).size() + 2});
  }
  if (fmt == RenderFormat::Text) {
    std::ostringstream os;
    for (int m = lo; m <= hi; ++m) {
      std::string line;
      for (int r = 1; r <= h; ++r) {
        const int p = m * N + r;
        const std::string cell = bead_at(a, p) ? "(" + std::to_string(p) + ")" : std::to_string(p);
        line += detail::pad(cell, width);
        if (r < h) line += ' ';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
    return os.str();
  }
  constexpr int cw = 44;
  constexpr int ch = 26;
  std::string s = detail::svg_open(h * cw + 4, (hi - lo + 1) * ch + 4);
  for (int m = lo; m <= hi; ++m) {
    for (int r = 1; r <= h; ++r) {
      const int p = m * N + r;
      const int cx = 2 + (r - 1) * cw + cw / 2;
      const int cy = 2 + (m - lo) * ch + ch / 2;
      if (bead_at(a, p)) {
        s += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) +
             "\" r=\"11\" fill=\"none\" stroke=\"black\"/>\n";
      }
      s += "<text x=\"" + std::to_string(cx) + "\" y=\"" + std::to_string(cy + 4) + "\" text-anchor=\"middle\">" +
           std::to_string(p) + "</text>\n";
    }
  }
  return s + "</svg>\n";
}

inline std::string render_core(const CorePartition& lam, RenderFormat fmt, bool residues = true) {
  if (lam.is_empty()) return std::string(kEmptyDiagram);
  auto label = [&](int i, int j) { return residues ? detail::residue_label(residue(lam, {i, j})) : std::string(" "); };
  if (fmt == RenderFormat::Text) return detail::box_grid(lam.rows(), label, [](int) { return std::string(); });
  auto fill = [&](int i, int j) { return detail::region_fill(lam.context(), i, j); };
  if (residues) return detail::svg_grid(lam.rows(), label, fill);
  return detail::svg_grid(lam.rows(), [](int, int) { return std::string(); }, fill);
}

inline std::string render_bounded(const BoundedPartition& beta, RenderFormat fmt, bool residues = true) {
  if (beta.parts.empty()) return std::string(kEmptyDiagram);
  const auto grid = residue_filling(beta);
  auto label = [&](int i, int j) { return residues ? std::to_string(grid[i - 1][j - 1]) : std::string(" "); };
  auto suffix = [&](int i) { return beta.star && *beta.star == i - 1 ? std::string(" *") : std::string(); };
  if (fmt == RenderFormat::Text) return detail::box_grid(beta.parts, label, suffix);
  auto fill = [&](int i, int) { return beta.star && *beta.star == i - 1 ? std::string("lightgray") : std::string("white"); };
  return detail::svg_grid(beta.parts, label, fill);
}

/// One frame per peel step: the generator applied, then the partition with
/// the box recorded at that step marked by brackets.
inline std::string render_peel_trace(const CorePartition& lam, RenderFormat fmt, bool residues = true) {
  if (fmt == RenderFormat::Svg) {
    throw Error(ErrorCode::UnrenderableCombination, "peel traces are rendered as text only");
  }
  if (lam.is_empty()) return std::string(kEmptyDiagram);
  const auto peel = central_peel(lam);
  std::ostringstream os;
  for (std::size_t k = 0; k < peel.steps.size(); ++k) {
    const auto& st = peel.steps[k];
    const auto& cur = st.before;
    auto label = [&](int i, int j) {
      std::string s = residues ? detail::residue_label(residue(cur, {i, j})) : std::string(" ");
      if (i == st.box.i && j == st.box.j) s = "[" + s + "]";
      return s;
    };
    if (k) os << "\n";
    os << "frame " << k + 1 << ": s" << st.generator << "\n";
    os << detail::box_grid(cur.rows(), label, [](int) { return std::string(); });
  }
  return os.str();
}

}  // namespace affine_abacus
