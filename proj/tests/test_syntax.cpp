#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ambient/syntax.hpp"

using namespace ambient;

TEST_CASE("parse basic processes") {
  CHECK(equal(parse_process("0"), nil()));

  auto expect =
      par(repl(amb(NameRef::name("a"),
                   prefix(Capability{CapKind::In, NameRef::name("c")}, nil()))),
          prefix(Capability{CapKind::Open, NameRef::name("a")},
                 amb(NameRef::name("b"), nil())));
  CHECK(equal(parse_process("!a[in c] | open a.b[0]"), expect));
  // "in c" abbreviates "in c.0"
  CHECK(equal(parse_process("!a[in c.0] | open a.b[0]"), expect));
}

TEST_CASE("prefix binds tighter than parallel") {
  auto p = parse_process("open a.0 | b[0]");
  REQUIRE(p->kind == PKind::Par);
  CHECK(p->left->kind == PKind::Prefix);
  CHECK(p->right->kind == PKind::Amb);

  auto q = parse_process("open a.(0 | b[0])");
  CHECK(q->kind == PKind::Prefix);
  CHECK(q->left->kind == PKind::Par);
  CHECK_FALSE(equal(p, q));
}

TEST_CASE("abstraction vs grouping parens") {
  auto p = parse_process("(x)(<x> | (x)0)");
  REQUIRE(p->kind == PKind::Abs);
  REQUIRE(p->left->kind == PKind::Par);
  CHECK(p->left->left->kind == PKind::Msg);
  CHECK(p->left->left->name == NameRef::variable(0));
  REQUIRE(p->left->right->kind == PKind::Abs);
  CHECK(p->left->right->left->kind == PKind::Nil);

  // plain grouping: (a[0]) and ((a[0])) are just a[0]
  CHECK(equal(parse_process("((a[0]))"), parse_process("a[0]")));
  // (x) followed by something that is not a process start is grouping of the
  // bare-name error case: "(x)" alone is invalid either way
  CHECK_THROWS_AS(parse_process("(x)"), ParseError);
}

TEST_CASE("alpha equivalence is structural equality") {
  CHECK(equal(parse_process("(x)<x>"), parse_process("(y)<y>")));
  CHECK(equal(parse_process("(x)(y)(<x> | <y>)"), parse_process("(u)(v)(<u> | <v>)")));
  CHECK_FALSE(equal(parse_process("(x)(y)<x>"), parse_process("(x)(y)<y>")));
}

TEST_CASE("shadowing resolves to the innermost binder") {
  auto p = parse_process("(x)(x)<x>");
  REQUIRE(p->kind == PKind::Abs);
  REQUIRE(p->left->kind == PKind::Abs);
  CHECK(p->left->left->name == NameRef::variable(0));
}

TEST_CASE("free names and closedness") {
  auto p = parse_process("(x)(n[<x>] | in m.0)");
  CHECK(closed(p));
  CHECK(free_names(p) == std::set<std::string>{"n", "m"});
  CHECK_FALSE(closed(p->left));  // body alone has the dangling variable
}

TEST_CASE("substitution opens binders") {
  auto p = parse_process("(x)(x[0] | <x>)");
  auto opened = open_abs(p->left, "k");
  CHECK(equal(opened, parse_process("k[0] | <k>")));

  // inner binder untouched, outer variable replaced
  auto q = parse_process("(x)(<x> | (y)(<x> | <y>))");
  auto oq = open_abs(q->left, "k");
  CHECK(equal(oq, parse_process("<k> | (y)(<k> | <y>)")));
}

TEST_CASE("substitute_ref with a variable target shifts under binders") {
  // body of (x)(y)<y> seen from under x only: (y)<y> ... substitute var 0 of
  // the two-binder body <x> pattern instead:
  auto p = parse_process("(x)(y)(<x> | <y>)");
  // open outer binder with a *variable* reference (as beta does when the
  // message itself is a bound variable of an enclosing binder)
  auto body = p->left;  // (y)(<x=1 seen from inside, 0 from here> | <y>)
  auto r = substitute_ref(body, 0, NameRef::variable(5));
  // under the remaining binder the replacement index shifts to 6
  REQUIRE(r->kind == PKind::Abs);
  CHECK(r->left->left->name == NameRef::variable(6));
  CHECK(r->left->right->name == NameRef::variable(0));
}

TEST_CASE("node_count") {
  CHECK(node_count(parse_process("0")) == 1);
  CHECK(node_count(parse_process("a[0]")) == 2);
  CHECK(node_count(parse_process("!a[in c.0] | open a.b[0]")) == 8);
}

TEST_CASE("printer round-trips") {
  const char* samples[] = {
      "0",
      "a[0]",
      "!a[in c.0] | open a.b[0]",
      "(x)(<x> | (x)0)",
      "open a.(0 | b[0])",
      "m[n[out m.0 | 0] | open p.0]",
      "(x)x[<x>]",
      "!(a[0] | !b[0])",
  };
  for (const char* s : samples) {
    auto p = parse_process(s);
    CHECK(equal(parse_process(print_process(p)), p));
  }
}

TEST_CASE("printer renames binders that clash with free names") {
  // binder hint "n" collides with the free name n inside
  auto p = abs("n", par(msg(NameRef::variable(0)), amb(NameRef::name("n"), nil())));
  auto printed = print_process(p);
  auto q = parse_process(printed);
  CHECK(equal(p, q));
  CHECK(free_names(q) == std::set<std::string>{"n"});
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_process("a[0");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 4);
  }
  CHECK_THROWS_AS(parse_process("a |"), ParseError);
  CHECK_THROWS_AS(parse_process("x"), ParseError);       // bare name not a process
  CHECK_THROWS_AS(parse_process("in.0"), ParseError);    // missing target
  CHECK_THROWS_AS(parse_process("<a b>"), ParseError);
  CHECK_THROWS_AS(parse_process("#x[0]"), ParseError);   // reserved namespace
}

TEST_CASE("serialize ignores hints, distinguishes structure") {
  CHECK(serialize(parse_process("(x)<x>")) == serialize(parse_process("(y)<y>")));
  CHECK(serialize(parse_process("a[0]")) != serialize(parse_process("b[0]")));
  CHECK(serialize(parse_process("in a.0")) != serialize(parse_process("out a.0")));
  CHECK(serialize(parse_process("a[0] | b[0]")) != serialize(parse_process("b[0] | a[0]")));
}

TEST_CASE("process ordering is a strict total order on distinct terms") {
  const char* xs[] = {"0", "a[0]", "b[0]", "in a.0", "<a>", "(x)<x>", "!0", "0 | 0"};
  for (auto& a : xs)
    for (auto& b : xs) {
      auto pa = parse_process(a), pb = parse_process(b);
      int ab = cmp(pa, pb), ba = cmp(pb, pa);
      CHECK(ab == -ba);
      if (std::string(a) != b) CHECK(ab != 0);
    }
}

// ---------------------------------------------------------------------------
// Formulas

TEST_CASE("parse formulas and precedence") {
  auto f = parse_formula("T");
  CHECK(f->kind == FKind::True);

  // -> weakest: A \/ B -> C | D parses as (A \/ B) -> (C | D)
  auto g = parse_formula("0 \\/ T -> 0 | T");
  CHECK(g->sugar == FSugar::Implies);

  // @ binds tighter than |
  auto h = parse_formula("0 @ n | T");
  REQUIRE(h->kind == FKind::ParF);
  CHECK(h->left->kind == FKind::At);

  // |> between or/and and |
  auto k = parse_formula("T /\\ 0 |> T");
  CHECK(k->sugar == FSugar::And);
  REQUIRE(k->kind == FKind::Not);  // And expands to ~(~A \/ ~B)
  auto rhs = k->left->right->left;  // second conjunct
  CHECK(rhs->kind == FKind::Guarantee);
}

TEST_CASE("sugar expands to primitives but prints back folded") {
  auto f = parse_formula("exists x. x[T] /\\ ~0");
  CHECK(f->kind == FKind::Not);  // Exists = ~forall~
  CHECK(f->sugar == FSugar::Exists);
  auto printed = print_formula(f);
  CHECK(equal(parse_formula(printed), f));

  CHECK(equal(parse_formula("F"), f_not(f_true())));
  CHECK(equal(parse_formula("[]T"), f_not(f_sometime(f_not(f_true())))));
  CHECK(equal(parse_formula("T -> 0"), f_or(f_not(f_true()), f_void())));
  CHECK(equal(parse_formula("T |>> 0"), f_not(f_guarantee(f_true(), f_not(f_void())))));
}

TEST_CASE("formula equality ignores sugar tags") {
  CHECK(equal(parse_formula("T -> 0"), parse_formula("~T \\/ 0")));
  CHECK(equal(parse_formula("F"), parse_formula("~T")));
  CHECK(equal(parse_formula("exists x. x[T]"), parse_formula("~forall x. ~x[T]")));
}

TEST_CASE("formula round-trips") {
  const char* samples[] = {
      "T", "F", "0", "~0", "n[T]", "0 | 0", "T @ n", "T |> n[0]",
      "forall x. x[T] -> <>(x[0] | T)",
      "exists x. forall y. x[y[0]] |> <>(y[0] | T)",
      "[](0 \\/ n[T])",
      "(T |>> <>n[0]) /\\ ~0",
      "T @ n @ m",
      "~(~0 | ~0) /\\ ~0",
  };
  for (const char* s : samples) {
    auto f = parse_formula(s);
    CAPTURE(s);
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("formula variables and substitution") {
  auto f = parse_formula("forall x. x[T] | n[0 @ x]");
  CHECK(closed(f));
  CHECK(free_names(f) == std::set<std::string>{"n"});
  auto body = f->left;
  CHECK_FALSE(closed(body));
  auto opened = substitute(body, 0, "k");
  CHECK(closed(opened));
  CHECK(equal(opened, parse_formula("k[T] | n[0 @ k]")));

  // name_to_var inverts it
  auto reclosed = name_to_var(opened, "k", 0);
  CHECK(equal(reclosed, body));
}

TEST_CASE("quantifier binder alpha-irrelevant") {
  CHECK(equal(parse_formula("forall x. x[T]"), parse_formula("forall z. z[T]")));
  CHECK(equal(parse_formula("exists x. forall y. x[y[0]]"),
              parse_formula("exists a. forall b. a[b[0]]")));
}

TEST_CASE("formula parse errors") {
  CHECK_THROWS_AS(parse_formula("T |"), ParseError);
  CHECK_THROWS_AS(parse_formula("forall. T"), ParseError);
  CHECK_THROWS_AS(parse_formula("n["), ParseError);
  CHECK_THROWS_AS(parse_formula("#n[T]"), ParseError);
  CHECK_THROWS_AS(parse_formula("T ->"), ParseError);
}

TEST_CASE("fresh_name avoids the given set and uses the reserved namespace") {
  std::set<std::string> avoid{"#0", "#1", "n"};
  auto f = fresh_name(avoid);
  CHECK(f == "#2");
  CHECK(is_reserved_name(f));
  CHECK_FALSE(is_reserved_name("n"));
  CHECK(fresh_name({}) == "#0");
}
