#include "ambient/enumerate.hpp"

#include <deque>
#include <map>
#include <set>

namespace ambient {

namespace {

// raw terms of exact size s with v (0 or 1) variables in scope, memoized
struct Gen {
  std::vector<std::string> names;
  bool allow_repl, allow_io;
  std::map<std::pair<int, int>, std::vector<PProc>> memo;

  std::vector<NameRef> heads(int v) const {
    std::vector<NameRef> hs;
    for (const auto& n : names) hs.push_back(NameRef::name(n));
    if (v) hs.push_back(NameRef::variable(0, "x"));
    return hs;
  }

  const std::vector<PProc>& terms(int s, int v) {
    auto key = std::make_pair(s, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<PProc> out;
    if (s >= 1) {
      if (s == 1) {
        out.push_back(nil());
        if (allow_io)
          for (const auto& h : heads(v)) out.push_back(msg(h));
      } else {
        for (const auto& h : heads(v))
          for (const auto& b : terms(s - 1, v)) out.push_back(amb(h, b));
        for (CapKind k : {CapKind::In, CapKind::Out, CapKind::Open})
          for (const auto& h : heads(v))
            for (const auto& b : terms(s - 1, v))
              out.push_back(prefix(Capability{k, h}, b));
        if (allow_repl)
          for (const auto& b : terms(s - 1, v)) out.push_back(repl(b));
        if (allow_io && v == 0)
          for (const auto& b : terms(s - 1, 1)) out.push_back(abs("x", b));
        for (int ls = 1; ls <= s - 2; ++ls)
          for (const auto& l : terms(ls, v))
            for (const auto& r : terms(s - 1 - ls, v)) out.push_back(par(l, r));
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<PProc> enumerate_processes(const std::vector<std::string>& alphabet,
                                       int max_size, bool allow_repl, bool allow_io) {
  Gen g{alphabet, allow_repl, allow_io, {}};
  std::vector<PProc> out;
  std::set<std::string> seen;
  if (max_size < 1) max_size = 1;  // 0 always fits
  for (int s = 1; s <= max_size; ++s)
    for (const auto& p : g.terms(s, 0))
      if (seen.insert(canonical_key(p)).second) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Bidirectional axiom rewriting

namespace {

void local_rewrites(const PProc& p, std::vector<PProc>& out) {
  // P | 0 == P (both directions, both orientations)
  if (p->kind == PKind::Par) {
    if (p->right->kind == PKind::Nil) out.push_back(p->left);
    if (p->left->kind == PKind::Nil) out.push_back(p->right);
  }
  out.push_back(par(p, nil()));
  // commutativity / associativity
  if (p->kind == PKind::Par) {
    out.push_back(par(p->right, p->left));
    if (p->left->kind == PKind::Par)
      out.push_back(par(p->left->left, par(p->left->right, p->right)));
    if (p->right->kind == PKind::Par)
      out.push_back(par(par(p->left, p->right->left), p->right->right));
  }
  // !P == !P | P
  if (p->kind == PKind::Repl) out.push_back(par(repl(p->left), p->left));
  if (p->kind == PKind::Par) {
    if (p->left->kind == PKind::Repl && equal(p->left->left, p->right))
      out.push_back(p->left);
    if (p->right->kind == PKind::Repl && equal(p->right->left, p->left))
      out.push_back(p->right);
  }
  // !0 == 0
  if (p->kind == PKind::Repl && p->left->kind == PKind::Nil) out.push_back(nil());
  if (p->kind == PKind::Nil) out.push_back(repl(nil()));
  // !(P|Q) == !P | !Q
  if (p->kind == PKind::Repl && p->left->kind == PKind::Par)
    out.push_back(par(repl(p->left->left), repl(p->left->right)));
  if (p->kind == PKind::Par && p->left->kind == PKind::Repl &&
      p->right->kind == PKind::Repl)
    out.push_back(repl(par(p->left->left, p->right->left)));
  // !!P == !P
  if (p->kind == PKind::Repl && p->left->kind == PKind::Repl)
    out.push_back(p->left);
  if (p->kind == PKind::Repl) out.push_back(repl(p));
}

}  // namespace

std::vector<PProc> axiom_rewrites(const PProc& p) {
  std::vector<PProc> out;
  local_rewrites(p, out);
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Msg:
      break;
    case PKind::Par:
      for (const auto& l : axiom_rewrites(p->left)) out.push_back(par(l, p->right));
      for (const auto& r : axiom_rewrites(p->right)) out.push_back(par(p->left, r));
      break;
    case PKind::Repl:
      for (const auto& b : axiom_rewrites(p->left)) out.push_back(repl(b));
      break;
    case PKind::Prefix:
      for (const auto& b : axiom_rewrites(p->left)) out.push_back(prefix(p->cap, b));
      break;
    case PKind::Amb:
      for (const auto& b : axiom_rewrites(p->left)) out.push_back(amb(p->name, b));
      break;
    case PKind::Abs:
      for (const auto& b : axiom_rewrites(p->left)) out.push_back(abs(p->hint, b));
      break;
  }
  return out;
}

std::vector<PProc> axiom_closure(const PProc& p, int depth, int size_cap) {
  if (size_cap <= 0) size_cap = node_count(p) + 8;
  std::set<std::string> seen{serialize(p)};
  std::vector<PProc> out{p};
  std::deque<std::pair<PProc, int>> frontier{{p, 0}};
  while (!frontier.empty()) {
    auto [cur, d] = frontier.front();
    frontier.pop_front();
    if (d >= depth) continue;
    for (const auto& q : axiom_rewrites(cur)) {
      if (node_count(q) > size_cap) continue;
      if (!seen.insert(serialize(q)).second) continue;
      out.push_back(q);
      frontier.emplace_back(q, d + 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed formulas over the primitive connectives

namespace {

struct FGen {
  std::vector<std::string> names;
  std::map<std::pair<int, int>, std::vector<FProc>> memo;

  std::vector<NameRef> heads(int v) const {
    std::vector<NameRef> hs;
    for (const auto& n : names) hs.push_back(NameRef::name(n));
    if (v) hs.push_back(NameRef::variable(0, "x"));
    return hs;
  }

  const std::vector<FProc>& terms(int s, int v) {
    auto key = std::make_pair(s, v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<FProc> out;
    if (s == 1) {
      out.push_back(f_true());
      out.push_back(f_void());
    } else if (s > 1) {
      for (const auto& a : terms(s - 1, v)) {
        out.push_back(f_not(a));
        out.push_back(f_sometime(a));
      }
      for (const auto& h : heads(v))
        for (const auto& a : terms(s - 1, v)) {
          out.push_back(f_amb(h, a));
          out.push_back(f_at(a, h));
        }
      if (v == 0)
        for (const auto& a : terms(s - 1, 1)) out.push_back(f_forall("x", a));
      for (int ls = 1; ls <= s - 2; ++ls)
        for (const auto& l : terms(ls, v))
          for (const auto& r : terms(s - 1 - ls, v)) {
            out.push_back(f_or(l, r));
            out.push_back(f_par(l, r));
            out.push_back(f_guarantee(l, r));
          }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<FProc> enumerate_formulas(const std::vector<std::string>& alphabet,
                                      int max_size) {
  FGen g{alphabet, {}};
  std::vector<FProc> out;
  std::set<std::string> seen;
  for (int s = 1; s <= max_size; ++s)
    for (const auto& f : g.terms(s, 0))
      if (seen.insert(serialize(f)).second) out.push_back(f);
  return out;
}

}  // namespace ambient
