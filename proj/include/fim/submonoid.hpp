#pragma once

// Finitely generated rational submonoids of F: the pi-image subgroup with
// element witnesses, computable finite generating sets (three cases by the
// shape of the pi-image), and star-height-one normalization of rational
// expressions.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fim/cutpaste.hpp"
#include "fim/decide.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/membership.hpp"
#include "fim/rataut.hpp"

namespace fim {

struct GeneratorSet {
  int case_id = 1;              // 1: Mpi = {0}; 2: one-sided; 3: both sides
  std::vector<Element> X;       // sorted, deduplicated
  Constants c;                  // cases 2 and 3 only
  std::int64_t K = 0;           // trimmed state count bound of Lemma 7.2
  std::optional<std::int64_t> p;       // case 3: generator of Mpi = pZ
  std::optional<Element> u_sym;        // case 3: u with u.pi = p, u^-1 in M
  bool inverted = false;               // case 2 ran on the inverse automaton
  std::optional<bool> certified;       // nullopt: certification skipped
};

struct GenOptions {
  bool prune = false;        // emit the pruned set instead of the full ball
  bool certify = true;       // run equal(X*, A) when feasible
  std::size_t certify_limit = 64;  // max literals in the certification star
  std::int64_t ceiling = kDefaultCeiling;
};

/// The pi-image subgroup pZ of a rational submonoid whose pi-image meets
/// both N and -N, with witnesses: u in M with u.pi = p, and the
/// symmetrization u_sym = u u' u, whose inverse u' u u' is again in M.
struct PiSubgroup {
  std::int64_t p;
  Element u;
  Element u_sym;
};

inline PiSubgroup pi_subgroup(const Automaton& a0) {
  Automaton a = trim(a0);
  SemilinearSet s = pi_image(a);
  if (!s.intersects_positive() || !s.intersects_negative())
    throw precondition_error(
        "pi_subgroup: pi-image must meet both N and -N (case 3 only)");
  std::int64_t p = subgroup_gcd(s);
  // For a submonoid, Mpi is a submonoid of Z meeting both signs, hence the
  // full group pZ; both +-p are realized by accepted words.
  if (!s.contains(p) || !s.contains(-p))
    throw precondition_error("pi_subgroup: input is not a submonoid");
  Element u = eval_word(find_word_with_pi(a, p));
  Element uprime = eval_word(find_word_with_pi(a, -p));
  Element usym = multiply(multiply(u, uprime), u);
  if (!member_fast(a, usym) || !member_fast(a, inverse(usym)))
    throw error("pi_subgroup: symmetrized witness failed membership (bug)");
  return {p, u, usym};
}

namespace detail {

/// Sound redundancy prune: walk the ball in ascending norm, keeping an
/// element only when it is not yet a product of kept elements. The set
/// (kept)* is grown incrementally inside the ball; that is complete because
/// every prefix of a product has its interval inside the full product's
/// interval, so witnessing products never leave the ball.
inline std::vector<Element> prune_generators(const std::set<Element>& xs) {
  std::vector<Element> order(xs.begin(), xs.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Element& a, const Element& b) {
                     return norm(a) < norm(b);
                   });
  std::vector<Element> kept;
  std::set<Element> gen;      // (kept)* intersected with the ball
  std::vector<Element> work;  // gen members not yet right-multiplied
  auto add = [&](const Element& u) {
    if (xs.count(u) && gen.insert(u).second) work.push_back(u);
  };
  add(identity());
  for (const Element& x : order) {
    if (gen.count(x)) continue;
    kept.push_back(x);
    for (const Element& g : std::vector<Element>(gen.begin(), gen.end()))
      add(multiply(g, x));
    while (!work.empty()) {
      Element g = work.back();
      work.pop_back();
      for (const Element& k : kept) add(multiply(g, k));
    }
  }
  return kept;
}

/// (x_1 | ... | x_k)* over shortest-word literals (shortest words keep the
/// word-level automaton dense, so it reduces well).
inline Automaton star_of_elements(const std::vector<Element>& xs) {
  std::vector<RatExpr> lits;
  for (const Element& x : xs) lits.push_back(RatExpr::literal(min_word(x)));
  RatExpr body = lits.empty() ? RatExpr::literal({})
                 : lits.size() == 1 ? std::move(lits[0])
                                    : RatExpr::alt(std::move(lits));
  return compile(RatExpr::star(std::move(body)));
}

inline std::vector<Element> ball_filtered(const Automaton& a, std::int64_t bound) {
  std::vector<Element> out;
  for (const Element& u : enumerate_ball(a, -bound, bound))
    if (norm(u) <= bound) out.push_back(u);
  return out;
}

}  // namespace detail

/// A computable finite generating set for the rational submonoid L(A).
inline GeneratorSet generators(const Automaton& a0, const GenOptions& opts = {}) {
  Automaton a = reduce(a0);
  Verdict sub = is_submonoid(a, opts.ceiling);
  if (!sub.holds)
    throw precondition_error("generators: input is not a submonoid (witness " +
                             to_string(*sub.witness) + ")");
  GeneratorSet gs;
  gs.K = a.states;
  SemilinearSet s = pi_image(a);
  std::int64_t g = subgroup_gcd(s);
  std::vector<Element> raw;
  if (g == 0) {
    // case 1: Mpi = {0}; M is finite, inside the open K-ball
    gs.case_id = 1;
    for (const Element& u : enumerate_ball(a, -(gs.K - 1), gs.K - 1))
      raw.push_back(u);
  } else if (!s.intersects_positive() || !s.intersects_negative()) {
    // case 2: one-sided; normalize to the positive side
    gs.case_id = 2;
    gs.inverted = !s.intersects_positive();
    Automaton b = gs.inverted ? reduce(inverse_automaton(a)) : a;
    Automaton bb = reduce(beta_automaton(b));
    gs.c = harmonize({constants(b, opts.ceiling), constants(bb, opts.ceiling)});
    std::int64_t n = gs.c.n, np = gs.c.nprime;
    std::int64_t bound = checked_add(
        checked_add(checked_mul(checked_add(n, 1), np), checked_mul(n, n)),
        checked_mul(2, gs.K));
    raw = detail::ball_filtered(b, bound);
    if (gs.inverted)
      for (Element& x : raw) x = inverse(x);
  } else {
    // case 3: both sides; adjust constants to the symmetrized witness
    gs.case_id = 3;
    PiSubgroup ps = pi_subgroup(a);
    gs.p = ps.p;
    gs.u_sym = ps.u_sym;
    Constants c = constants(a, opts.ceiling);
    c = adjust(c, {ps.p, std::max(norm(ps.u_sym), gs.K)});
    gs.c = c;
    std::int64_t bound = checked_mul(18, c.nprime);
    if (bound > opts.ceiling)
      throw constant_overflow("generators: 18n' exceeds the ceiling");
    raw = detail::ball_filtered(a, bound);
  }
  std::set<Element> xs(raw.begin(), raw.end());
  std::vector<Element> pruned = detail::prune_generators(xs);
  gs.X = opts.prune ? pruned : std::vector<Element>(xs.begin(), xs.end());
  if (opts.certify && pruned.size() <= opts.certify_limit) {
    Verdict eq = equal(detail::star_of_elements(pruned), a, opts.ceiling);
    if (!eq.holds)
      throw error("generators: certification failed with witness " +
                  to_string(*eq.witness) + " (internal bug)");
    gs.certified = true;
  }
  return gs;
}

/// Rewrite an expression to star height <= 1 with the same image in F:
/// every starred subexpression K* is replaced by (x_1|...|x_k)* over a
/// generating set of the submonoid (K*)theta.
inline RatExpr star_height_one(const RatExpr& e,
                               const GenOptions& opts_in = {}) {
  GenOptions opts = opts_in;
  opts.prune = true;  // literal stars over the full ball are intractable
  std::function<RatExpr(const RatExpr&)> rec = [&](const RatExpr& x) -> RatExpr {
    RatExpr out = x;
    for (RatExpr& c : out.children) c = rec(c);
    if (out.kind != RatExpr::Star) return out;
    GeneratorSet gs = generators(compile(out), opts);
    std::vector<RatExpr> lits;
    for (const Element& g : gs.X) lits.push_back(RatExpr::literal(min_word(g)));
    RatExpr body = lits.empty() ? RatExpr::literal({})
                   : lits.size() == 1 ? std::move(lits[0])
                                      : RatExpr::alt(std::move(lits));
    return RatExpr::star(std::move(body));
  };
  RatExpr result = rec(e);
  Verdict eq = equal(compile(result), compile(e), opts.ceiling);
  if (!eq.holds)
    throw error("star_height_one: verification failed with witness " +
                to_string(*eq.witness) + " (internal bug)");
  return result;
}

}  // namespace fim
