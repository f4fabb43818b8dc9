#pragma once

/// @file kset.hpp
/// @brief Zero continued fractions K_m and the admissible subset K(Y).
///
/// A chain k = (k_2, ..., k_{e-1}) defines q_1 = 0, q_2 = 1,
/// q_{i+1} = k_i q_i - q_{i-1}. It is a zero chain when q_i > 0 for
/// 2 <= i <= e-1 and q_e = 0.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "cqs/chain.hpp"
#include "cqs/int.hpp"

namespace cqs {

struct KChain {
  std::vector<Int> k;      // k_2 .. k_{e-1}
  std::vector<Int> q_seq;  // q_1 .. q_e

  std::size_t size() const { return k.size(); }
  /// q_i for 1-based i.
  const Int& q(std::size_t i) const { return q_seq[i - 1]; }

  friend bool operator==(const KChain& a, const KChain& b) { return a.k == b.k; }
  friend std::strong_ordering operator<=>(const KChain& a, const KChain& b) {
    return std::lexicographical_compare_three_way(a.k.begin(), a.k.end(), b.k.begin(), b.k.end(),
                                                  compare);
  }
};

inline std::vector<Int> q_sequence(const std::vector<Int>& k) {
  std::vector<Int> q{0, 1};
  q.reserve(k.size() + 2);
  for (const Int& ki : k) {
    Int next = ki * q.back() - q[q.size() - 2];
    q.push_back(std::move(next));
  }
  return q;
}

inline bool is_zero_chain(const std::vector<Int>& k) {
  if (k.empty()) return false;
  std::vector<Int> q = q_sequence(k);
  for (std::size_t i = 1; i + 1 < q.size(); ++i)
    if (q[i] <= 0) return false;
  return q.back() == 0;
}

/// (1, 2, ..., 2, 1) of length m >= 2; always a member of K(Y).
inline std::vector<Int> rdp_chain(std::size_t m) {
  std::vector<Int> k(m, Int(2));
  if (m >= 1) k.front() = 1;
  if (m >= 1) k.back() = 1;
  return k;
}

inline KChain make_kchain(std::vector<Int> k) {
  std::vector<Int> q = q_sequence(k);
  return {std::move(k), std::move(q)};
}

namespace detail {

/// Depth-first search in lexicographic order. `cap(i)` bounds slot i
/// (0-based). The running q-sequence prunes any prefix with a non-positive
/// entry, and the last slot is solved exactly from q_e = 0.
inline std::vector<KChain> enumerate_zero_chains(std::size_t m,
                                                 const std::function<Int(std::size_t)>& cap) {
  std::vector<KChain> out;
  if (m < 2) return out;
  std::vector<Int> k(m);
  std::vector<Int> q{0, 1};  // q_1, q_2, then one entry per fixed slot
  q.reserve(m + 2);          // references into q stay valid during the search

  // A triangulated (m+1)-gon has 3(m-1) corners and the omitted vertex owns
  // at least one, so every entry still to come needs room below 3m - 4.
  const Int budget(3 * m - 4);
  Int spent = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t slot) {
    const Int& cur = q[slot + 1];
    const Int& prev = q[slot];
    if (slot + 1 == m) {
      // k_{e-1} q_{e-1} = q_{e-2}
      if (prev % cur != 0) return;
      Int forced = prev / cur;
      if (forced < 1 || forced > cap(slot)) return;
      k[slot] = forced;
      out.push_back(make_kchain(k));
      return;
    }
    Int bound = cap(slot);
    Int room = budget - spent - Int(m - slot - 1);
    if (room < bound) bound = room;
    for (Int v = 1; v <= bound; ++v) {
      Int next = v * cur - prev;
      if (next <= 0) continue;  // q grows with v, so larger v may still pass
      k[slot] = v;
      spent += v;
      q.push_back(std::move(next));
      dfs(slot + 1);
      q.pop_back();
      spent -= v;
    }
  };
  dfs(0);
  return out;
}

}  // namespace detail

/// All zero chains of length m, lexicographically sorted. Empty for m = 1.
inline std::vector<KChain> enumerate_K(std::size_t m) {
  // A vertex of a triangulated (m+1)-gon meets at most m-1 triangles.
  Int bound(m > 1 ? m - 1 : 1);
  return detail::enumerate_zero_chains(m, [&](std::size_t) { return bound; });
}

/// K(Y): zero chains with k_i <= a_i, capped during the search.
inline std::vector<KChain> enumerate_KY(const CoeffChain& a) {
  for (const Int& ai : a.coefficients)
    if (ai < 2) throw DomainError("enumerate_KY: a-chain entries must be >= 2");
  Int bound(a.size() > 1 ? a.size() - 1 : 1);
  return detail::enumerate_zero_chains(a.size(),
                                       [&](std::size_t i) { return a[i] < bound ? a[i] : bound; });
}

}  // namespace cqs
