#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affine_abacus/abacus.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/oracle.hpp"
#include "affine_abacus/peeling.hpp"

namespace affine_abacus {

struct BruhatPoset {
  std::vector<MirroredPermutation> elements;  // length-lex order
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> covers;    // (lower, upper) indices
};

/// Covering relations among elements of length <= max_len. Bruhat order is
/// graded, so covers are the comparable pairs one length apart.
inline BruhatPoset bruhat_poset(const GroupContext& ctx, int max_len) {
  const auto table = enumerate_quotient(ctx, max_len);
  BruhatOracle oracle(table);
  BruhatPoset P;
  P.elements = table.elements();
  for (const auto& w : P.elements) P.lengths.push_back(table.length(w));
  for (std::size_t u = 0; u < P.elements.size(); ++u) {
    for (std::size_t l = 0; l < P.elements.size(); ++l) {
      if (P.lengths[l] + 1 != P.lengths[u]) continue;
      if (oracle.leq(P.elements[l], P.elements[u])) P.covers.emplace_back(static_cast<int>(l), static_cast<int>(u));
    }
  }
  return P;
}

inline std::string to_dot(const BruhatPoset& P) {
  std::ostringstream os;
  os << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < P.elements.size(); ++k) {
    const auto beta = bounded_partition(from_abacus(from_permutation(P.elements[k])));
    const std::string label = beta.parts.empty() ? "e" : to_string(beta);
    os << "  n" << k << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [l, u] : P.covers) os << "  n" << l << " -> n" << u << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string poset(const GroupContext& ctx, int max_len) { return to_dot(bruhat_poset(ctx, max_len)); }

}  // namespace affine_abacus
