#pragma once

// Membership of elements of F in rational subsets, plus exhaustive ball
// enumeration. Two independent deciders are provided: a generic closure over
// (state, monoid value) pairs pruned by the J-order, and a fast geometric
// search over marked intervals. A slow word-level oracle cross-checks both.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/munn.hpp"
#include "fim/rataut.hpp"

namespace fim {

// ---------------------------------------------------------------------------
// Generic closure membership
// ---------------------------------------------------------------------------

/// Monoid interface for member_jabove: values of type M::Value with an
/// identity, right multiplication by a signed letter, equality, and the
/// J-order test "target <=_J value".
struct TripleMonoid {
  using Value = Element;
  static Value one() { return identity(); }
  static Value step(const Value& v, int sign) {
    return multiply(v, sign > 0 ? Element{0, 1, 1} : Element{-1, -1, 0});
  }
  static bool j_above(const Value& target, const Value& v) {
    return leq_J(target, v);  // target <=_J v, i.e. ||v|| <= ||target||
  }
};

/// The same interface realized by general Munn trees (specialised here to
/// the one-letter alphabet); exercises the tree-level definitions.
struct MunnMonoid {
  using Value = MunnTree;
  static Value one() { return fold(GenWord{}); }
  static Value step(const Value& v, int sign) {
    return mt_multiply(v, fold(GenWord{{'a', sign}}));
  }
  static bool j_above(const Value& target, const Value& v) {
    return embeds(v, target);
  }
};

/// u in L(A)? Worklist closure over (state, value) pairs, keeping only
/// values that stay J-above the target: any prefix of a witness word
/// evaluates J-above u, so pruning is complete. Terminates because only
/// finitely many elements lie J-above any fixed element.
template <class M>
bool member_jabove(const Automaton& a, const typename M::Value& target) {
  using Value = typename M::Value;
  std::set<std::pair<int, Value>> seen;
  std::deque<std::pair<int, Value>> work;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  for (int i : a.initial) {
    if (term.count(i) && M::one() == target) return true;
    seen.insert({i, M::one()});
    work.emplace_back(i, M::one());
  }
  while (!work.empty()) {
    auto [q, v] = work.front();
    work.pop_front();
    for (auto& [p, s, r] : a.edges) {
      if (p != q) continue;
      Value nv = M::step(v, s);
      if (!M::j_above(target, nv)) continue;
      if (term.count(r) && nv == target) return true;
      if (seen.insert({r, nv}).second) work.emplace_back(r, nv);
    }
  }
  return false;
}

inline bool member_jabove_triples(const Automaton& a, const Element& u) {
  return member_jabove<TripleMonoid>(a, u);
}

inline bool member_jabove_munn(const Automaton& a, const Element& u) {
  return member_jabove<MunnMonoid>(a, fold(parse_gen_word(canonical_word(u))));
}

// ---------------------------------------------------------------------------
// Fast geometric membership
// ---------------------------------------------------------------------------

/// u in L(A)? A word evaluates to u iff its prefix-sum walk stays inside
/// [lambda, rho], touches both endpoints, and ends at pi. BFS over
/// (state, position, touched-min, touched-max): O(|Q| * ||u||) states.
inline bool member_fast(const Automaton& a, const Element& u) {
  if (a.states == 0) return false;
  std::int64_t span = norm(u) + 1;
  auto idx = [&](int q, std::int64_t pos, bool mn, bool mx) {
    return ((static_cast<std::size_t>(q) * span +
             static_cast<std::size_t>(pos - u.lambda)) *
                2 +
            mn) *
               2 +
           mx;
  };
  std::vector<bool> seen(static_cast<std::size_t>(a.states) * span * 4, false);
  std::deque<std::tuple<int, std::int64_t, bool, bool>> work;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  std::vector<std::vector<std::pair<int, int>>> out(a.states);
  for (auto& [p, s, q] : a.edges) out[p].emplace_back(s, q);
  bool mn0 = u.lambda == 0, mx0 = u.rho == 0;
  for (int i : a.initial)
    if (!seen[idx(i, 0, mn0, mx0)]) {
      seen[idx(i, 0, mn0, mx0)] = true;
      work.emplace_back(i, 0, mn0, mx0);
    }
  while (!work.empty()) {
    auto [q, pos, mn, mx] = work.front();
    work.pop_front();
    if (mn && mx && pos == u.pi && term.count(q)) return true;
    for (auto& [s, r] : out[q]) {
      std::int64_t np = pos + s;
      if (np < u.lambda || np > u.rho) continue;
      bool nmn = mn || np == u.lambda, nmx = mx || np == u.rho;
      if (!seen[idx(r, np, nmn, nmx)]) {
        seen[idx(r, np, nmn, nmx)] = true;
        work.emplace_back(r, np, nmn, nmx);
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Ball enumeration
// ---------------------------------------------------------------------------

/// All elements u of L(A) with lambda >= lambda_min and rho <= rho_max.
/// Exact: every word witnessing such an element keeps its prefix sums in
/// [lambda_min, rho_max], so the bounded closure misses nothing.
inline std::set<Element> enumerate_ball(const Automaton& a,
                                        std::int64_t lambda_min,
                                        std::int64_t rho_max) {
  std::set<Element> out;
  if (a.states == 0 || lambda_min > 0 || rho_max < 0) return out;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  std::vector<std::vector<std::pair<int, int>>> adj(a.states);
  for (auto& [p, s, q] : a.edges) adj[p].emplace_back(s, q);
  // pack (state, pos, min-so-far, max-so-far); every coordinate < 2^16
  auto pack = [&](int q, std::int64_t pos, std::int64_t mn, std::int64_t mx) {
    return (static_cast<std::uint64_t>(q) << 48) |
           (static_cast<std::uint64_t>(pos - lambda_min) << 32) |
           (static_cast<std::uint64_t>(mn - lambda_min) << 16) |
           static_cast<std::uint64_t>(mx);
  };
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::tuple<int, std::int64_t, std::int64_t, std::int64_t>> work;
  for (int i : a.initial)
    if (seen.insert(pack(i, 0, 0, 0)).second) work.emplace_back(i, 0, 0, 0);
  while (!work.empty()) {
    auto [q, pos, mn, mx] = work.front();
    work.pop_front();
    if (term.count(q)) out.insert(Element{mn, pos, mx});
    for (auto& [s, r] : adj[q]) {
      std::int64_t np = pos + s;
      if (np < lambda_min || np > rho_max) continue;
      std::int64_t nmn = std::min(mn, np), nmx = std::max(mx, np);
      if (seen.insert(pack(r, np, nmn, nmx)).second)
        work.emplace_back(r, np, nmn, nmx);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word-level oracle
// ---------------------------------------------------------------------------

/// All elements reachable by accepted words of length <= maxlen. Slow and
/// literal-minded on purpose: configurations (state, min, sum, max) are
/// stepped one input letter at a time.
inline std::set<Element> oracle_enumerate(const Automaton& a, int maxlen) {
  std::set<Element> out;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  using Cfg = std::tuple<int, std::int64_t, std::int64_t, std::int64_t>;
  std::set<Cfg> cur;
  for (int i : a.initial) cur.insert({i, 0, 0, 0});
  for (int len = 0; len <= maxlen; ++len) {
    for (auto& [q, mn, sum, mx] : cur)
      if (term.count(q)) out.insert(Element{mn, sum, mx});
    if (len == maxlen) break;
    std::set<Cfg> nxt;
    for (auto& [q, mn, sum, mx] : cur)
      for (auto& [p, s, r] : a.edges)
        if (p == q) {
          std::int64_t ns = sum + s;
          nxt.insert({r, std::min(mn, ns), ns, std::max(mx, ns)});
        }
    cur = std::move(nxt);
  }
  return out;
}

/// Oracle membership: the same configuration stepping, but confined to the
/// box [u.lambda, u.rho] (witness prefix sums cannot leave it) and run to a
/// fixpoint, so the answer is exact rather than length-limited.
inline bool oracle_member(const Automaton& a, const Element& u) {
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  using Cfg = std::tuple<int, std::int64_t, std::int64_t, std::int64_t>;
  std::set<Cfg> seen;
  std::deque<Cfg> work;
  for (int i : a.initial) {
    Cfg c{i, 0, 0, 0};
    if (seen.insert(c).second) work.push_back(c);
  }
  while (!work.empty()) {
    auto [q, mn, sum, mx] = work.front();
    work.pop_front();
    if (term.count(q) && mn == u.lambda && sum == u.pi && mx == u.rho)
      return true;
    for (auto& [p, s, r] : a.edges)
      if (p == q) {
        std::int64_t ns = sum + s;
        if (ns < u.lambda || ns > u.rho) continue;
        Cfg c{r, std::min(mn, ns), ns, std::max(mx, ns)};
        if (seen.insert(c).second) work.push_back(c);
      }
  }
  return false;
}

}  // namespace fim
