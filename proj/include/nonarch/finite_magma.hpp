#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nonarch/errors.hpp"

namespace nonarch {

// One binary operation on {0, .., size-1}, no axioms assumed.
struct FiniteMagma {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = i * j

  static FiniteMagma make(std::vector<std::vector<std::size_t>> t) {
    FiniteMagma m;
    m.size = t.size();
    for (const auto& row : t) {
      if (row.size() != m.size) throw error("magma table is not square");
      for (auto v : row)
        if (v >= m.size) throw error("magma table entry out of range");
    }
    m.table = std::move(t);
    return m;
  }

  bool is_idempotent(std::size_t i) const { return table[i][i] == i; }

  // Relabel elements by the permutation perm (an isomorphic copy).
  FiniteMagma relabeled(const std::vector<std::size_t>& perm) const {
    std::vector<std::vector<std::size_t>> t(size, std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) t[perm[i]][perm[j]] = perm[table[i][j]];
    return make(std::move(t));
  }
};

using SubsetMask = std::uint32_t;

inline bool subset_closed(const FiniteMagma& m, SubsetMask s) {
  for (std::size_t i = 0; i < m.size; ++i) {
    if (!(s >> i & 1)) continue;
    for (std::size_t j = 0; j < m.size; ++j) {
      if (!(s >> j & 1)) continue;
      if (!(s >> m.table[i][j] & 1)) return false;
    }
  }
  return true;
}

// Sub-magmas are nonempty closed subsets; proper ones exclude the carrier.
inline std::vector<SubsetMask> proper_sub_magmas(const FiniteMagma& m) {
  std::vector<SubsetMask> out;
  const SubsetMask full = static_cast<SubsetMask>((1u << m.size) - 1);
  for (SubsetMask s = 1; s < full; ++s)
    if (subset_closed(m, s)) out.push_back(s);
  return out;
}

// The paper's convention: disjoint iff the intersection is void or consists of
// idempotent elements only.
inline bool disjoint_up_to_idempotents(const FiniteMagma& m, SubsetMask a, SubsetMask b) {
  SubsetMask common = a & b;
  for (std::size_t i = 0; i < m.size; ++i)
    if ((common >> i & 1) && !m.is_idempotent(i)) return false;
  return true;
}

struct MagmaScanReport {
  std::vector<SubsetMask> all_sub_magmas;
  std::vector<SubsetMask> family;  // one maximum-cardinality pairwise-disjoint family
  std::string note;
};

namespace detail {

inline void max_clique(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& cur,
                       std::vector<std::size_t>& cand, std::vector<std::size_t>& best) {
  if (cur.size() + cand.size() <= best.size()) return;
  if (cand.empty()) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  while (!cand.empty()) {
    if (cur.size() + cand.size() <= best.size()) return;
    std::size_t v = cand.back();
    cand.pop_back();
    cur.push_back(v);
    std::vector<std::size_t> next;
    for (auto u : cand)
      if (adj[v][u]) next.push_back(u);
    max_clique(adj, cur, next, best);
    cur.pop_back();
  }
}

}  // namespace detail

// Enumerates all proper sub-magmas and finds a maximum-cardinality family that
// is pairwise disjoint up to idempotents. Definition 3.2 demands an infinite
// family, which no finite carrier can host; the report says so explicitly.
inline MagmaScanReport finite_magma_scan(const FiniteMagma& m, std::size_t bound = 6) {
  if (m.size > bound)
    throw too_large("magma size " + std::to_string(m.size) + " exceeds exhaustive bound " +
                    std::to_string(bound));
  MagmaScanReport rep;
  rep.all_sub_magmas = proper_sub_magmas(m);
  const std::size_t n = rep.all_sub_magmas.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = i != j && disjoint_up_to_idempotents(m, rep.all_sub_magmas[i],
                                                       rep.all_sub_magmas[j]);
  std::vector<std::size_t> cur, best;
  std::vector<std::size_t> cand(n);
  for (std::size_t i = 0; i < n; ++i) cand[i] = n - 1 - i;
  detail::max_clique(adj, cur, cand, best);
  std::sort(best.begin(), best.end());
  for (auto i : best) rep.family.push_back(rep.all_sub_magmas[i]);
  rep.note =
      "Definition 3.2 requires an infinite set of pairwise disjoint proper sub-magmas; "
      "a finite carrier cannot satisfy it, so this is the largest finite family only.";
  return rep;
}

inline std::string subset_to_string(SubsetMask s, std::size_t size) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size; ++i) {
    if (!(s >> i & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace nonarch
