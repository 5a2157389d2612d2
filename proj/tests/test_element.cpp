#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fim/element.hpp"
#include "util.hpp"

using namespace fim;

TEST_CASE("eval_word on fixed words") {
  CHECK(eval_word("") == Element{0, 0, 0});
  CHECK(eval_word("Aaa") == Element{-1, 1, 1});
  CHECK(eval_word("aAA") == Element{-1, -1, 1});
  CHECK(eval_word("a") == Element{0, 1, 1});
  CHECK(eval_word("A") == Element{-1, -1, 0});
  CHECK(eval_word("aA") == Element{0, 0, 1});
  CHECK_THROWS_AS(eval_word("ab"), parse_error);
}

TEST_CASE("triple validation") {
  CHECK(valid(Element{-1, 0, 2}));
  CHECK_FALSE(valid(Element{1, 1, 1}));    // lambda > 0
  CHECK_FALSE(valid(Element{-1, 2, 1}));   // pi > rho
  CHECK_FALSE(valid(Element{-1, -2, 0}));  // pi < lambda
  CHECK_THROWS_AS(make_element(0, 2, 1), precondition_error);
}

TEST_CASE("multiplication on fixed pairs") {
  CHECK(multiply(Element{0, 1, 1}, Element{-1, 1, 1}) == Element{0, 2, 2});
  CHECK(multiply(Element{0, 0, 1}, Element{-1, -1, 0}) == Element{-1, -1, 1});
  CHECK(multiply(identity(), Element{-2, 1, 3}) == Element{-2, 1, 3});
  CHECK(multiply(Element{-2, 1, 3}, identity()) == Element{-2, 1, 3});
}

TEST_CASE("inverse, alpha, beta on fixed elements") {
  CHECK(inverse(Element{0, 2, 2}) == Element{-2, -2, 0});
  CHECK(inverse(identity()) == identity());
  CHECK(alpha(Element{0, 2, 2}) == Element{-2, -2, 0});
  CHECK(beta(Element{0, 1, 3}) == Element{-2, 1, 1});
  CHECK(beta(Element{-2, -1, 0}) == Element{-1, -1, 1});
  // beta fixes powers of the generator
  CHECK(beta(Element{0, 3, 3}) == Element{0, 3, 3});
  CHECK(beta(Element{-3, -3, 0}) == Element{-3, -3, 0});
}

TEST_CASE("idempotents, norm, J-order") {
  CHECK(is_idempotent(Element{-1, 0, 2}));
  CHECK_FALSE(is_idempotent(Element{-1, 1, 2}));
  CHECK(norm(Element{-1, 0, 2}) == 3);
  CHECK(leq_J(Element{-1, 0, 1}, Element{0, 1, 1}));
  CHECK_FALSE(leq_J(Element{0, 1, 1}, Element{-1, 0, 1}));
}

TEST_CASE("surgery domains and xi") {
  CHECK(xi(Element{-4, 1, 2}, 2, 1) == Element{-2, 1, 2});
  CHECK(xi(Element{0, 5, 6}, 2, 2) == Element{0, 3, 4});
  CHECK(xi(Element{-1, 0, 3}, 3, 3) == Element{-1, 0, 0});
  CHECK(in_G(Element{-4, 1, 2}, 2, 1));
  CHECK_FALSE(in_G(Element{-1, 1, 2}, 2, 1));
  CHECK_THROWS_AS(xi(Element{-1, 1, 2}, 2, 1), precondition_error);
  CHECK_THROWS_AS(xi(Element{0, 1, 1}, 2, 2), precondition_error);
  CHECK_THROWS_AS(in_G(Element{0, 0, 0}, 1, 4), precondition_error);
}

TEST_CASE("eta clamp") {
  CHECK(eta(3, 2, 5) == 3);
  CHECK(eta(7, 2, 5) == 3);   // largest value < 5 congruent to 7 mod 2
  CHECK(eta(-9, 2, 5) == -3);
  CHECK(eta(4, 2, 5) == 4);
  CHECK(eta(0, 1, 1) == 0);
  CHECK_THROWS_AS(eta(1, 3, 2), precondition_error);
  // residue preservation and range for a grid
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t np = n; np <= 9; ++np)
      for (std::int64_t z = -30; z <= 30; ++z) {
        std::int64_t e = eta(z, n, np);
        CHECK(-np < e);
        CHECK(e < np);
        if (z >= 0) CHECK(e >= 0);
        if (z <= 0) CHECK(e <= 0);
        std::int64_t m = z < 0 ? -z : z;
        if (m < np) CHECK(e == z);
        else CHECK((z - e) % n == 0);
      }
}

TEST_CASE("zeta clamp") {
  CHECK(zeta(Element{-1, 0, 1}, 1, 2) == Element{-1, 0, 1});
  CHECK(zeta(Element{-3, 2, 2}, 1, 2) == Element{-1, 1, 1});
  CHECK(zeta(Element{-4, 0, 0}, 1, 2) == Element{-1, 0, 0});
  CHECK_THROWS_AS(zeta(Element{-1, -1, 0}, 1, 2), precondition_error);
  // idempotent, lands in W, fixes W pointwise
  std::mt19937 rng(7);
  for (int it = 0; it < 2000; ++it) {
    std::int64_t n = 1 + it % 3, np = n + 1 + it % 5;
    Element u = test::random_element(rng, 4 * np);
    if (u.pi < 0) u = inverse(u);
    Element z = zeta(u, n, np);
    CHECK(valid(z));
    CHECK(in_W(z, np));
    CHECK(zeta(z, n, np) == z);
    if (in_W(u, np)) CHECK(z == u);
  }
}

TEST_CASE("canonical and minimal words") {
  CHECK(canonical_word(Element{-1, 1, 2}) == "AaaaA");
  CHECK(canonical_word(identity()) == "");
  CHECK(canonical_word(Element{-1, -1, 0}) == "AaA");
  CHECK(min_word(Element{-1, -1, 0}) == "A");
  CHECK(min_word(Element{0, 1, 1}) == "a");
  std::mt19937 rng(11);
  for (int it = 0; it < 3000; ++it) {
    Element u = test::random_element(rng, 12);
    CHECK(eval_word(canonical_word(u)) == u);
    CHECK(eval_word(min_word(u)) == u);
    CHECK(min_word(u).size() <= canonical_word(u).size());
    // min_word is genuinely shortest: both sweeps are shortest words for
    // their side, so just check against the closed-form lower bound
    std::int64_t lb = norm(u) + std::min(-u.lambda + (u.rho - u.pi),
                                         u.rho + (u.pi - u.lambda));
    CHECK(static_cast<std::int64_t>(min_word(u).size()) == lb);
  }
}

TEST_CASE("power") {
  CHECK(power(Element{0, 1, 1}, 3) == Element{0, 3, 3});
  CHECK(power(Element{-1, 0, 1}, 5) == Element{-1, 0, 1});
  CHECK(power(Element{-1, 1, 1}, 2) == Element{-1, 2, 2});
  CHECK(power(Element{0, 1, 1}, 0) == identity());
  CHECK_THROWS_AS(power(Element{0, 1, 1}, -1), precondition_error);
}

TEST_CASE("random word algebra") {
  std::mt19937 rng(13);
  for (int it = 0; it < 5000; ++it) {
    MonoWord w1 = test::random_mono_word(rng, 20);
    MonoWord w2 = test::random_mono_word(rng, 20);
    Element u = eval_word(w1), v = eval_word(w2);
    // concatenation realizes the product
    CHECK(eval_word(w1 + w2) == multiply(u, v));
    // involution laws
    CHECK(inverse(inverse(u)) == u);
    CHECK(inverse(multiply(u, v)) == multiply(inverse(v), inverse(u)));
    CHECK(multiply(multiply(u, inverse(u)), u) == u);
    // alpha is an automorphism, beta an anti-automorphism, both involutive
    CHECK(alpha(alpha(u)) == u);
    CHECK(beta(beta(u)) == u);
    CHECK(alpha(multiply(u, v)) == multiply(alpha(u), alpha(v)));
    CHECK(beta(multiply(u, v)) == multiply(beta(v), beta(u)));
    CHECK(beta(u) == inverse(alpha(u)));
    // norms never shrink under products
    CHECK(norm(multiply(u, v)) >= std::max(norm(u), norm(v)));
    // u u^-1 is idempotent
    CHECK(is_idempotent(multiply(u, inverse(u))));
  }
}

TEST_CASE("prefix coverage: every prefix evaluates J-above the word") {
  std::mt19937 rng(17);
  for (int it = 0; it < 1000; ++it) {
    MonoWord w = test::random_mono_word(rng, 25);
    Element u = eval_word(w);
    for (std::size_t i = 0; i <= w.size(); ++i)
      CHECK(leq_J(u, eval_word(w.substr(0, i))));
  }
}

TEST_CASE("xi / beta intertwining") {
  // beta exchanges the left surgery with the right surgery:
  // beta(xi_{n,1}(u)) = xi_{n,3}(beta(u)) on G_{n,1}, and
  // beta(xi_{n,2}(u)) = xi_{n,2}(beta(u)) on G_{n,2}.
  std::mt19937 rng(19);
  for (int it = 0; it < 3000; ++it) {
    std::int64_t n = 1 + it % 3;
    Element u1 = test::random_in_G(rng, n, 1, n + 8);
    CHECK(in_G(beta(u1), n, 3));
    CHECK(beta(xi(u1, n, 1)) == xi(beta(u1), n, 3));
    Element u2 = test::random_in_G(rng, n, 2, n + 8);
    CHECK(in_G(beta(u2), n, 2));
    CHECK(beta(xi(u2, n, 2)) == xi(beta(u2), n, 2));
    Element u3 = test::random_in_G(rng, n, 3, n + 8);
    CHECK(in_G(beta(u3), n, 1));
    CHECK(beta(xi(u3, n, 3)) == xi(beta(u3), n, 1));
  }
}
