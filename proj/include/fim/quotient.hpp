#pragma once

// The finite quotient M = <a | a^{K+n} = a^K> of F, computed with Stephen's
// procedure on one-letter Schuetzenberger graphs, the homomorphism phi from
// F onto M, and the recognizability test for rational subsets.

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "fim/cutpaste.hpp"
#include "fim/decide.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/membership.hpp"
#include "fim/munn.hpp"
#include "fim/rataut.hpp"

namespace fim {

/// An element of M: the closed Schuetzenberger graph of any representative,
/// with markers. One-letter closed graphs are simple paths or simple cycles
/// (in/out degree <= 1 everywhere); the shared Munn-tree folding and its
/// marker-anchored BFS canonicalization make structural equality decide
/// equality in M.
struct MElement {
  std::int64_t K = 1;
  std::int64_t n = 1;
  MunnTree g;  // canonicalized; letter 'a' only

  friend bool operator==(const MElement&, const MElement&) = default;
  friend auto operator<=>(const MElement&, const MElement&) = default;
};

namespace detail {

// successor/predecessor maps of a folded one-letter graph
struct SuccPred {
  std::vector<int> succ, pred;
  explicit SuccPred(const MunnTree& g)
      : succ(g.vertices, -1), pred(g.vertices, -1) {
    for (auto& [p, c, q] : g.edges) {
      succ[p] = q;
      pred[q] = p;
    }
  }
  // endpoint of the a^k path from v, or -1
  int walk(int v, std::int64_t k) const {
    for (std::int64_t i = 0; i < k && v >= 0; ++i) v = succ[v];
    return v;
  }
};

}  // namespace detail

/// Does `w` read from the initial to the terminal marker of g?
inline bool readable(const MunnTree& g, const MonoWord& w) {
  detail::SuccPred sp(g);
  int v = g.initial;
  for (char c : w) {
    v = c == 'a' ? sp.succ[v] : sp.pred[v];
    if (v < 0) return false;
  }
  return v == g.terminal;
}

/// A word whose closure (with parameters K, n) is g again, reading from the
/// initial to the terminal marker.
inline MonoWord representative_word(const MunnTree& g, std::int64_t K = 1) {
  detail::SuccPred sp(g);
  int source = -1;
  for (int v = 0; v < g.vertices; ++v)
    if (sp.pred[v] < 0) source = v;
  MonoWord w;
  if (source >= 0) {
    // path: back to the source, sweep to the sink, back up to the marker
    std::vector<std::int64_t> pos(g.vertices, 0);
    for (int v = source, i = 0; v >= 0; v = sp.succ[v], ++i) pos[v] = i;
    std::int64_t len = g.vertices - 1;
    w.append(static_cast<std::size_t>(pos[g.initial]), 'A');
    w.append(static_cast<std::size_t>(len), 'a');
    w.append(static_cast<std::size_t>(len - pos[g.terminal]), 'A');
  } else {
    // cycle of length c with the terminal marker at distance t: the word
    // must be long enough (>= K) to re-collapse onto the cycle, and must
    // end on the marker (length congruent to t mod c)
    std::int64_t c = g.vertices;
    std::int64_t t = 0;
    for (int v = g.initial; v != g.terminal; v = sp.succ[v]) ++t;
    std::int64_t base = std::max<std::int64_t>(K, c);
    std::int64_t len = base + (((t - base) % c) + c) % c;
    w.append(static_cast<std::size_t>(len), 'a');
  }
  return w;
}

inline MonoWord representative_word(const MElement& x) {
  return representative_word(x.g, x.K);
}

/// Stephen's procedure: sew the other side of the defining relation wherever
/// one side is readable, fold, repeat to the (finite) closure.
inline MElement stephen_close_graph(MunnTree g, std::int64_t K, std::int64_t n) {
  if (K < 1 || n < 1)
    throw precondition_error("stephen_close requires K >= 1 and n >= 1");
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw error("stephen_close: closure did not stabilize");
    detail::SuccPred sp(g);
    int sew_from = -1, sew_to = -1;
    std::int64_t sew_len = 0;
    for (int v = 0; v < g.vertices && sew_from < 0; ++v) {
      int wk = sp.walk(v, K), wkn = sp.walk(v, K + n);
      if (wk >= 0 && wkn != wk) {
        // a^K reads v->wk, so a^{K+n} must read v->wk as well
        sew_from = v;
        sew_to = wk;
        sew_len = K + n;
      } else if (wkn >= 0 && wk != wkn) {
        sew_from = v;
        sew_to = wkn;
        sew_len = K;
      }
    }
    if (sew_from < 0) break;
    auto edges = g.edges;
    int fresh = g.vertices;
    int cur = sew_from;
    for (std::int64_t i = 0; i + 1 < sew_len; ++i) {
      edges.emplace_back(cur, 'a', fresh);
      cur = fresh++;
    }
    edges.emplace_back(cur, 'a', sew_to);
    g = fold_edges(fresh, std::move(edges), g.initial, g.terminal);
  }
  return {K, n, std::move(g)};
}

/// phi(u): close the Munn path of u's canonical word.
inline MElement stephen_close(const Element& u, std::int64_t K, std::int64_t n) {
  return stephen_close_graph(fold(parse_gen_word(canonical_word(u))), K, n);
}

/// Equality in M: canonical graphs compare structurally; cross-checked by
/// Stephen's mutual-readability criterion to guard canonicalization.
inline bool m_equal(const MElement& x, const MElement& y) {
  if (x.K != y.K || x.n != y.n)
    throw precondition_error("m_equal: mixed presentations");
  bool structural = x.g == y.g;
  bool readable_both = readable(y.g, representative_word(x)) &&
                       readable(x.g, representative_word(y));
  if (structural != readable_both)
    throw error("m_equal: canonical form and readability disagree (bug)");
  return structural;
}

/// Multiplication in M: glue the graphs at terminal/initial, fold, re-close.
inline MElement m_multiply(const MElement& x, const MElement& y) {
  if (x.K != y.K || x.n != y.n)
    throw precondition_error("m_multiply: mixed presentations");
  return stephen_close_graph(mt_multiply(x.g, y.g), x.K, x.n);
}

/// phi(L(A)) as a finite subset of M, by closure over (state, MElement).
inline std::set<MElement> phi_image(const Automaton& a, std::int64_t K,
                                    std::int64_t n) {
  std::set<MElement> out;
  if (a.states == 0) return out;
  MElement one = stephen_close(identity(), K, n);
  MElement gen_a = stephen_close(make_element(0, 1, 1), K, n);
  MElement gen_A = stephen_close(make_element(-1, -1, 0), K, n);
  std::set<std::pair<int, MElement>> seen;
  std::vector<std::pair<int, MElement>> work;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  for (int i : a.initial)
    if (seen.insert({i, one}).second) work.emplace_back(i, one);
  while (!work.empty()) {
    auto [q, x] = work.back();
    work.pop_back();
    if (term.count(q)) out.insert(x);
    for (auto& [p, s, r] : a.edges)
      if (p == q) {
        MElement nx = m_multiply(x, s > 0 ? gen_a : gen_A);
        if (seen.insert({r, nx}).second) work.emplace_back(r, nx);
      }
  }
  return out;
}

/// Is L(A) recognizable? L is recognizable iff L = L phi phi^-1 for the
/// quotient with K = 3n'. The saturated language L phi phi^-1 is invariant
/// under the surgeries outside the G_{K+2n,i} thresholds, so disagreement
/// with L, if any, shows up inside the window W_{3n'+2n} (or its inverse).
inline Verdict is_recognizable(const Automaton& a0,
                               std::int64_t ceiling = kDefaultCeiling) {
  Automaton a = reduce(a0);
  Verdict v;
  if (a.states == 0) return v;  // the empty set is recognizable
  Automaton ai = reduce(inverse_automaton(a));
  v.c = harmonize({constants(a, ceiling), constants(ai, ceiling)});
  std::int64_t n = v.c.n, K = 3 * v.c.nprime, N = K + 2 * n;
  if (N > 60)
    throw constant_overflow("is_recognizable: window bound " +
                            std::to_string(N) + " is beyond practical limits");
  std::set<MElement> lphi = phi_image(a, K, n);
  std::optional<Element> best;
  auto consider = [&](const Element& u) {
    if (best && norm(*best) <= norm(u)) return;
    if (member_fast(a, u)) return;
    if (lphi.count(stephen_close(u, K, n))) best = u;
  };
  // sweep the window and its inverse: u = (lam, pi, rho) with pi >= 0
  for (std::int64_t lam = -(N - 1); lam <= 0; ++lam)
    for (std::int64_t pi = 0; pi < N; ++pi)
      for (std::int64_t rho = std::max<std::int64_t>(pi, 0); rho < pi + N; ++rho) {
        Element u = make_element(lam, pi, rho);
        consider(u);
        if (u.pi != 0) consider(inverse(u));
      }
  if (best) {
    v.holds = false;
    v.witness = best;
  }
  return v;
}

/// DOT export of a Schuetzenberger graph.
inline std::string to_dot(const MElement& x) { return to_dot(x.g); }

}  // namespace fim
