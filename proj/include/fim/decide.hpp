#pragma once

// Decision procedures for rational subsets of F: normal forms over the
// finite window W_{n'}, inclusion and equality with self-certifying
// witnesses, and the rational-submonoid test via L* = L.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "fim/cutpaste.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/membership.hpp"
#include "fim/rataut.hpp"

namespace fim {

/// L determined by its trace on the window: L+ = { u : zeta(u) in W } and
/// L- = { u : zeta(u^-1) in Wprime }.
struct NormalForm {
  Constants c;
  std::set<Element> W;       // L  intersected with W_{n'}
  std::set<Element> Wprime;  // L^-1 intersected with W_{n'}
};

struct Verdict {
  bool holds = true;
  std::optional<Element> witness;  // present iff !holds
  Constants c;
};

namespace detail {

/// L(A) intersected with the window W_{n'}, by one bounded ball sweep.
inline std::set<Element> window_ball(const Automaton& a, std::int64_t nprime) {
  std::set<Element> out;
  for (const Element& u : enumerate_ball(a, -(nprime - 1), 2 * (nprime - 1)))
    if (in_W(u, nprime)) out.insert(u);
  return out;
}

/// A shortest accepted word of a nonempty trimmed automaton.
inline MonoWord shortest_word(const Automaton& a) {
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  std::vector<std::pair<int, int>> prev(a.states, {-2, 0});  // (state, sign)
  std::vector<int> queue;
  for (int i : a.initial)
    if (prev[i].first == -2) {
      prev[i] = {-1, 0};
      queue.push_back(i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (term.count(v)) {
      MonoWord w;
      while (prev[v].first != -1) {
        w.push_back(letter_char(prev[v].second));
        v = prev[v].first;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (auto& [p, s, q] : a.edges)
      if (p == v && prev[q].first == -2) {
        prev[q] = {v, s};
        queue.push_back(q);
      }
  }
  throw precondition_error("shortest_word: empty language");
}

/// Minimal-norm element of the set difference ws \ L(b), if any.
inline std::optional<Element> ball_difference_witness(const std::set<Element>& ws,
                                                     const Automaton& b) {
  std::optional<Element> best;
  for (const Element& u : ws) {
    if (best && norm(*best) <= norm(u)) continue;
    if (!member_fast(b, u)) best = u;
  }
  return best;
}

}  // namespace detail

/// Normal form of L(A): constants harmonized over A and its inverse, then
/// two window sweeps.
inline NormalForm normal_form(const Automaton& a0,
                              std::int64_t ceiling = kDefaultCeiling) {
  Automaton a = reduce(a0);
  NormalForm nf;
  if (a.states == 0) return nf;  // empty language: W = W' = {}
  Automaton ai = reduce(inverse_automaton(a));
  nf.c = harmonize({constants(a, ceiling), constants(ai, ceiling)});
  if (nf.c.nprime > ceiling)
    throw constant_overflow("normal_form: harmonized n' exceeds ceiling");
  nf.W = detail::window_ball(a, nf.c.nprime);
  nf.Wprime = detail::window_ball(ai, nf.c.nprime);
  return nf;
}

/// Membership via a normal form: u in L iff the clamp of its positive
/// (resp. inverted) form lands in W (resp. Wprime).
inline bool nf_member(const NormalForm& nf, const Element& u) {
  if (nf.W.empty() && nf.Wprime.empty()) return false;
  if (u.pi >= 0) return nf.W.count(zeta(u, nf.c.n, nf.c.nprime)) > 0;
  return nf.Wprime.count(zeta(inverse(u), nf.c.n, nf.c.nprime)) > 0;
}

/// K subset of L? Positive and negative parts are compared on the common
/// window; any difference element is a genuine counterexample, returned
/// after verification by member_fast on both automata.
inline Verdict included(const Automaton& k0, const Automaton& l0,
                        std::int64_t ceiling = kDefaultCeiling) {
  Automaton k = reduce(k0), l = reduce(l0);
  Verdict v;
  if (k.states == 0) return v;  // {} subset of anything
  if (l.states == 0) {
    Element w = eval_word(detail::shortest_word(k));
    v.holds = false;
    v.witness = w;
    return v;
  }
  Automaton ki = reduce(inverse_automaton(k)), li = reduce(inverse_automaton(l));
  v.c = harmonize({constants(k, ceiling), constants(l, ceiling),
                   constants(ki, ceiling), constants(li, ceiling)});
  if (v.c.nprime > ceiling)
    throw constant_overflow("included: harmonized n' exceeds ceiling");
  std::int64_t np = v.c.nprime;
  auto wk = detail::window_ball(k, np);
  auto wki = detail::window_ball(ki, np);
  std::optional<Element> pos = detail::ball_difference_witness(wk, l);
  std::optional<Element> neg = detail::ball_difference_witness(wki, li);
  if (neg) *neg = inverse(*neg);  // element of K^-1 \ L^-1, invert back
  std::optional<Element> best = pos;
  if (neg && (!best || norm(*neg) < norm(*best))) best = neg;
  if (best) {
    if (!member_fast(k, *best) || member_fast(l, *best))
      throw error("included: witness failed verification (internal bug)");
    v.holds = false;
    v.witness = best;
  }
  return v;
}

/// K = L? Both inclusions share one harmonized constant set.
inline Verdict equal(const Automaton& k0, const Automaton& l0,
                     std::int64_t ceiling = kDefaultCeiling) {
  Automaton k = reduce(k0), l = reduce(l0);
  bool ke = k.states == 0, le = l.states == 0;
  Verdict v;
  if (ke && le) return v;
  if (ke != le) {
    const Automaton& full = ke ? l : k;
    v.holds = false;
    v.witness = eval_word(detail::shortest_word(full));
    return v;
  }
  Automaton ki = reduce(inverse_automaton(k)), li = reduce(inverse_automaton(l));
  v.c = harmonize({constants(k, ceiling), constants(l, ceiling),
                   constants(ki, ceiling), constants(li, ceiling)});
  if (v.c.nprime > ceiling)
    throw constant_overflow("equal: harmonized n' exceeds ceiling");
  std::int64_t np = v.c.nprime;
  auto wk = detail::window_ball(k, np);
  auto wl = detail::window_ball(l, np);
  auto wki = detail::window_ball(ki, np);
  auto wli = detail::window_ball(li, np);
  std::optional<Element> cands[4] = {
      detail::ball_difference_witness(wk, l),
      detail::ball_difference_witness(wl, k),
      detail::ball_difference_witness(wki, li),
      detail::ball_difference_witness(wli, ki)};
  if (cands[2]) *cands[2] = inverse(*cands[2]);
  if (cands[3]) *cands[3] = inverse(*cands[3]);
  std::optional<Element> best;
  for (auto& c : cands)
    if (c && (!best || norm(*c) < norm(*best))) best = c;
  if (best) {
    bool in_k = member_fast(k, *best), in_l = member_fast(l, *best);
    if (in_k == in_l)
      throw error("equal: witness failed verification (internal bug)");
    v.holds = false;
    v.witness = best;
  }
  return v;
}

/// L is a submonoid of F iff L* = L; the witness, if any, lies in L* \ L.
inline Verdict is_submonoid(const Automaton& a0,
                            std::int64_t ceiling = kDefaultCeiling) {
  Automaton a = reduce(a0);
  return included(star_automaton(a), a, ceiling);
}

}  // namespace fim
