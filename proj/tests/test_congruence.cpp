#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ambient/congruence.hpp"

using namespace ambient;

static PProc P(const char* s) { return parse_process(s); }

TEST_CASE("congruence axioms") {
  CHECK(congruent(P("a[0] | 0"), P("a[0]")));
  CHECK(congruent(P("0 | a[0]"), P("a[0]")));
  CHECK(congruent(P("a[0] | b[0]"), P("b[0] | a[0]")));
  CHECK(congruent(P("(a[0] | b[0]) | c[0]"), P("a[0] | (b[0] | c[0])")));
  CHECK(congruent(P("!0"), P("0")));
  CHECK(congruent(P("!(a[0] | b[0])"), P("!a[0] | !b[0]")));
  CHECK(congruent(P("!!a[0]"), P("!a[0]")));
  CHECK(congruent(P("!a[0] | a[0]"), P("!a[0]")));  // absorption
  CHECK(congruent(P("open a.b[0] | !a[in c]"), P("!a[in c] | open a.b[0]")));
}

TEST_CASE("repl idempotence holds in canonical form") {
  CHECK(congruent(P("!a[0] | !a[0]"), P("!a[0]")));
  CHECK(congruent(P("!open n.0 | !open n.0 | open n.0"), P("!open n.0")));
}

TEST_CASE("non-congruent pairs") {
  CHECK_FALSE(congruent(P("open n.0"), P("open m.0")));
  CHECK_FALSE(congruent(P("a[0]"), P("a[0] | a[0]")));
  CHECK_FALSE(congruent(P("!a[0]"), P("a[0]")));
  CHECK_FALSE(congruent(P("in n.0"), P("out n.0")));
  CHECK_FALSE(congruent(P("open n.(a[0] | b[0])"), P("open n.a[0] | open n.b[0]")));
  CHECK_FALSE(congruent(P("<n>"), P("(x)<x>")));
  // congruence under prefixes applies the axioms in depth
  CHECK(congruent(P("open n.(a[0] | 0)"), P("open n.a[0]")));
  CHECK(congruent(P("n[!0]"), P("n[0]")));
}

TEST_CASE("canonicalize deduplicates repl and sorts components") {
  auto cf = canonicalize(P("b[0] | !a[0] | a[0] | !a[0] | 0"));
  CHECK(cf.plain.size() == 1);  // a[0] absorbed, b[0] stays
  CHECK(cf.repl.size() == 1);
  CHECK(equal(to_process(cf), to_process(canonicalize(P("b[0] | !a[0]")))));
}

TEST_CASE("canonical round trip") {
  const char* samples[] = {
      "0", "a[0]", "!a[in c] | open a.b[0]", "(x)(<x> | (x)0)",
      "!(a[0] | !b[c[0]])", "m[n[out m] | open p]",
  };
  for (const char* s : samples) {
    auto p = P(s);
    CHECK(congruent(to_process(canonicalize(p)), p));
    CHECK(canonical_key(p) == canonical_key(to_process(canonicalize(p))));
  }
}

TEST_CASE("eta normalization") {
  CHECK(equal(eta_normalize(P("(x)(<x> | (x)0)")), P("(x)0")));
  CHECK(equal(eta_normalize(P("(x)0")), P("(x)0")));
  // constant payload: not a redex
  auto keep = P("(x)(<n> | (x)0)");
  CHECK(equal(eta_normalize(keep), keep));
  // outer binder occurring in the inner abstraction blocks the rewrite
  auto keep2 = P("(x)(<x> | (y)<x>)");
  CHECK(equal(eta_normalize(keep2), keep2));
  // nested redexes collapse iteratively
  CHECK(equal(eta_normalize(P("(x)(<x> | (y)(<y> | (z)0))")), P("(z)0")));
  // redex found modulo congruence (extra 0, commuted components)
  CHECK(equal(eta_normalize(P("(x)((x)0 | 0 | <x>)")), P("(x)0")));
  // redexes below other constructors
  CHECK(equal(eta_normalize(P("n[(x)(<x> | (x)0)]")), P("n[(x)0]")));
}

TEST_CASE("beta normalization") {
  CHECK(congruent(beta_normalize(P("<n> | (x)x[0]")), P("n[0]")));
  CHECK(equal(beta_normalize(P("open n.0")), P("open n.0")));
  CHECK(congruent(beta_normalize(P("(x)(<x> | (y)y[0])")), P("(x)x[0]")));
  // two redexes
  CHECK(congruent(beta_normalize(P("<n> | (x)x[0] | <m> | (y)open y")),
                  P("n[0] | open m")));
  // replicated message feeds the abstraction but is kept
  CHECK(congruent(beta_normalize(P("!<n> | (x)x[0]")), P("!<n> | n[0]")));
  // replicated abstraction is not consumed
  auto keep = P("<n> | !(x)x[0]");
  CHECK(congruent(beta_normalize(keep), keep));
  // redexes under prefixes/ambients
  CHECK(congruent(beta_normalize(P("m[<n> | (x)x[0]]")), P("m[n[0]]")));
  CHECK(congruent(beta_normalize(P("open a.(<n> | (x)x[0])")), P("open a.n[0]")));
}

TEST_CASE("beta/eta preserve free names and are idempotent") {
  const char* samples[] = {
      "<n> | (x)x[0]", "(x)(<x> | (x)0)", "!<n> | (x)(x[0] | <m>)",
      "m[<n> | (x)(x[0] | open k)]", "(x)(<x> | (y)(<y> | (z)0))",
  };
  for (const char* s : samples) {
    auto p = P(s);
    auto b = beta_normalize(p), e = eta_normalize(p);
    CHECK(free_names(b) == free_names(p));
    CHECK(free_names(e) == free_names(p));
    CHECK(equal(beta_normalize(b), b));
    CHECK(equal(eta_normalize(e), e));
  }
}

TEST_CASE("sequentiality degree") {
  CHECK(sd(P("0")) == 0);
  CHECK(sd(P("in n.open m.0")) == 2);
  CHECK(sd(P("a[open n.0] | open m.open k.open l.0")) == 3);
  CHECK(sd(P("!open n.0")) == 1);
  CHECK(sd(P("<n>")) == 1);
  // abstraction body is beta-normalized first: (x)(<n>|(y)y[0]) has body
  // normalizing to n[0], sd 0, so total 1 rather than 2
  CHECK(sd(P("(x)(<n> | (y)y[0])")) == 1);
  CHECK(sd(P("(x)<x>")) == 2);
}

TEST_CASE("depth degree") {
  CHECK(dd(P("n[m[0]]")) == 2);
  CHECK(dd(P("open n.m[0]")) == 0);
  CHECK(dd(P("n[0] | m[k[0]]")) == 2);
  CHECK(dd(P("!n[m[0]]")) == 2);
  CHECK(dd(P("(x)x[0]")) == 0);
  CHECK(dd(P("<n>")) == 0);
}

TEST_CASE("occurrence depth of a name") {
  CHECK(depth_n(P("m[n[0]]"), "n") == Depth(1));
  CHECK(depth_n(P("n[0]"), "n") == Depth(0));
  CHECK(depth_n(P("<m>"), "n") == std::nullopt);
  CHECK(depth_n(P("<n>"), "n") == Depth(0));
  CHECK(depth_n(P("0"), "n") == std::nullopt);
  CHECK(depth_n(P("in n.0"), "n") == Depth(0));
  CHECK(depth_n(P("in m.n[0]"), "n") == Depth(1));
  CHECK(depth_n(P("m[0] | k[n[0]]"), "n") == Depth(1));  // min over components
  CHECK(depth_n(P("!m[n[0]]"), "n") == Depth(1));
  // abstraction: one step plus the depth in the normalized body
  CHECK(depth_n(P("(x)n[0]"), "n") == Depth(1));
  CHECK(depth_n(P("(x)(<n> | (y)m[y[0]])"), "n") == Depth(2));
}

TEST_CASE("sd and dd are congruence invariants on samples") {
  const char* pairs[][2] = {
      {"a[0] | 0", "a[0]"},
      {"!(open n.0 | m[in k.0])", "!open n.0 | !m[in k.0]"},
      {"!!<n>", "!<n>"},
      {"!open n.open m.0 | open n.open m.0", "!open n.open m.0"},
  };
  for (auto& pr : pairs) {
    CHECK(sd(P(pr[0])) == sd(P(pr[1])));
    CHECK(dd(P(pr[0])) == dd(P(pr[1])));
    CHECK(depth_n(P(pr[0]), "n") == depth_n(P(pr[1]), "n"));
  }
}

TEST_CASE("is_finite") {
  CHECK_FALSE(is_finite(P("!n[0]")));
  CHECK(is_finite(P("!0")));
  CHECK(is_finite(P("open n.0 | m[0]")));
  CHECK_FALSE(is_finite(P("m[!n[0]]")));   // nested replication
  CHECK(is_finite(P("m[!0 | n[0]]")));
}

TEST_CASE("is_single") {
  CHECK(is_single(P("open n.0")));
  CHECK(is_single(P("n[a[0] | b[0]]")));
  CHECK(is_single(P("(x)<x>")));
  CHECK_FALSE(is_single(P("0")));
  CHECK_FALSE(is_single(P("a[0] | b[0]")));
  CHECK_FALSE(is_single(P("!open n.0")));
  CHECK_FALSE(is_single(P("<n>")));
  CHECK(is_single(P("open n.0 | 0")));  // modulo congruence
}
