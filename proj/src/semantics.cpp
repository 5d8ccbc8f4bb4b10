#include "ambient/semantics.hpp"

#include <deque>
#include <set>

namespace ambient {

namespace {

struct Avail {
  CanonicalSingle s;
  bool fromRepl;
  size_t idx;  // position in plain or repl
};

std::vector<Avail> avail_of(const CanonicalForm& cf) {
  std::vector<Avail> out;
  for (size_t i = 0; i < cf.plain.size(); ++i) out.push_back({cf.plain[i], false, i});
  for (size_t i = 0; i < cf.repl.size(); ++i) out.push_back({cf.repl[i], true, i});
  return out;
}

// cf with the avail copies at positions `used` consumed (replicated copies
// just vanish), plus extra processes merged in
CanonicalForm rebuild(const CanonicalForm& cf, const std::vector<const Avail*>& used,
                      const std::vector<PProc>& extra) {
  std::vector<bool> dropPlain(cf.plain.size(), false);
  for (const Avail* a : used)
    if (!a->fromRepl) dropPlain[a->idx] = true;
  std::vector<CanonicalSingle> plain;
  for (size_t i = 0; i < cf.plain.size(); ++i)
    if (!dropPlain[i]) plain.push_back(cf.plain[i]);
  std::vector<CanonicalSingle> repl = cf.repl;
  for (const auto& e : extra) {
    CanonicalForm c = canonicalize(e);
    plain.insert(plain.end(), c.plain.begin(), c.plain.end());
    repl.insert(repl.end(), c.repl.begin(), c.repl.end());
  }
  return make_canonical(std::move(plain), std::move(repl));
}

// like rebuild but the result is one component of a larger term
PProc rebuild_p(const CanonicalForm& cf, const std::vector<const Avail*>& used,
                const std::vector<PProc>& extra) {
  return to_process(rebuild(cf, used, extra));
}

bool is_name(const NameRef& r, const std::string& n) { return !r.var && r.text == n; }

void reducts_cf(const CanonicalForm& cf, std::vector<PProc>& out) {
  auto av = avail_of(cf);
  for (size_t i = 0; i < av.size(); ++i) {
    const Avail& a = av[i];
    // Red-Open: open n.P | n[Q] --> P | Q
    if (a.s.kind == PKind::Prefix && a.s.cap.kind == CapKind::Open &&
        !a.s.cap.target.var) {
      for (size_t j = 0; j < av.size(); ++j) {
        if (j == i) continue;
        const Avail& b = av[j];
        if (b.s.kind == PKind::Amb && b.s.name == a.s.cap.target)
          out.push_back(rebuild_p(cf, {&a, &b},
                                  {to_process(*a.s.body), to_process(*b.s.body)}));
      }
    }
    // Red-Com: <M> | (x)P --> P{M/x}
    if (a.s.kind == PKind::Msg) {
      for (size_t j = 0; j < av.size(); ++j) {
        if (j == i) continue;
        const Avail& b = av[j];
        if (b.s.kind == PKind::Abs)
          out.push_back(rebuild_p(
              cf, {&a, &b}, {substitute_ref(to_process(*b.s.body), 0, a.s.name)}));
      }
    }
    if (a.s.kind != PKind::Amb) continue;
    const CanonicalForm& bodyA = *a.s.body;
    // Red-Amb: reduction inside the ambient
    {
      std::vector<PProc> inner;
      reducts_cf(bodyA, inner);
      for (const auto& r : inner)
        out.push_back(rebuild_p(cf, {&a}, {amb(a.s.name, r)}));
    }
    auto innerAv = avail_of(bodyA);
    // Red-In: n[in m.P1 | P2] | m[Q] --> m[n[P1|P2] | Q]
    for (const Avail& ip : innerAv) {
      if (ip.s.kind != PKind::Prefix || ip.s.cap.kind != CapKind::In ||
          ip.s.cap.target.var)
        continue;
      for (size_t j = 0; j < av.size(); ++j) {
        if (j == i) continue;
        const Avail& b = av[j];
        if (b.s.kind != PKind::Amb || !(b.s.name == ip.s.cap.target)) continue;
        PProc movedIn = amb(a.s.name, rebuild_p(bodyA, {&ip}, {to_process(*ip.s.body)}));
        PProc newM = amb(b.s.name, rebuild_p(*b.s.body, {}, {movedIn}));
        out.push_back(rebuild_p(cf, {&a, &b}, {newM}));
      }
    }
    // Red-Out: m[n[out m.P1 | P2] | Q] --> n[P1|P2] | m[Q]  (a is m here)
    for (const Avail& child : innerAv) {
      if (child.s.kind != PKind::Amb) continue;
      auto grand = avail_of(*child.s.body);
      for (const Avail& op : grand) {
        if (op.s.kind != PKind::Prefix || op.s.cap.kind != CapKind::Out) continue;
        if (!(op.s.cap.target == a.s.name)) continue;
        PProc escaped =
            amb(child.s.name, rebuild_p(*child.s.body, {&op}, {to_process(*op.s.body)}));
        PProc newM = amb(a.s.name, rebuild_p(bodyA, {&child}, {}));
        out.push_back(rebuild_p(cf, {&a}, {escaped, newM}));
      }
    }
  }
}

}  // namespace

std::vector<PProc> reducts(const PProc& p) {
  std::vector<PProc> raw;
  reducts_cf(canonicalize(p), raw);
  std::vector<PProc> out;
  std::set<std::string> seen;
  for (const auto& q : raw) {
    auto r = to_process(canonicalize(q));
    if (seen.insert(serialize(r)).second) out.push_back(r);
  }
  return out;
}

ReachSet reachable(const PProc& p, int max_depth) {
  ReachSet rs;
  std::set<std::string> seen;
  std::deque<std::pair<PProc, int>> frontier;
  auto start = to_process(canonicalize(p));
  seen.insert(serialize(start));
  rs.states.push_back(canonicalize(start));
  frontier.emplace_back(start, 0);
  while (!frontier.empty()) {
    auto [cur, d] = frontier.front();
    frontier.pop_front();
    if (d >= max_depth) {
      if (!reducts(cur).empty()) rs.complete = false;
      rs.depth_used = max_depth;
      continue;
    }
    for (const auto& q : reducts(cur)) {
      if (!seen.insert(serialize(q)).second) continue;
      rs.states.push_back(canonicalize(q));
      rs.depth_used = std::max(rs.depth_used, d + 1);
      frontier.emplace_back(q, d + 1);
    }
  }
  return rs;
}

std::vector<PProc> labelled(const PProc& p, const Label& l) {
  CanonicalForm cf = canonicalize(p);
  auto av = avail_of(cf);
  std::vector<PProc> raw;
  for (const Avail& a : av) {
    switch (l.kind) {
      case Label::Cap:
        if (a.s.kind == PKind::Prefix && a.s.cap == l.cap)
          raw.push_back(rebuild_p(cf, {&a}, {to_process(*a.s.body)}));
        break;
      case Label::Output:
        if (a.s.kind == PKind::Msg && is_name(a.s.name, l.name))
          raw.push_back(rebuild_p(cf, {&a}, {}));
        break;
      case Label::Input:
        if (a.s.kind == PKind::Abs)
          raw.push_back(
              rebuild_p(cf, {&a}, {substitute(to_process(*a.s.body), 0, l.name)}));
        break;
    }
  }
  std::vector<PProc> out;
  std::set<std::string> seen;
  for (const auto& q : raw) {
    auto r = to_process(canonicalize(q));
    if (seen.insert(serialize(r)).second) out.push_back(r);
  }
  return out;
}

std::vector<PProc> weak_labelled(const PProc& p, const Label& l, int depth,
                                 bool* complete) {
  bool comp = true;
  std::set<std::string> seen;
  std::vector<PProc> out;
  ReachSet pre = reachable(p, depth);
  comp = comp && pre.complete;
  for (const auto& s : pre.states) {
    for (const auto& mid : labelled(to_process(s), l)) {
      ReachSet post = reachable(mid, depth);
      comp = comp && post.complete;
      for (const auto& t : post.states) {
        auto q = to_process(t);
        if (seen.insert(serialize(q)).second) out.push_back(q);
      }
    }
  }
  if (complete) *complete = comp;
  return out;
}

ReachSet stutter_reachable(const PProc& p, const Capability& cap, const Budget& b) {
  if (cap.target.var) throw std::invalid_argument("stutter_reachable: variable target");
  ReachSet rs;
  if (cap.kind == CapKind::Open) return reachable(p, b.reach_depth);

  Label first = Label::capability(
      {cap.kind == CapKind::In ? CapKind::Out : CapKind::In, cap.target});
  Label second = Label::capability(cap);

  auto start = to_process(canonicalize(p));
  std::set<std::string> seen{serialize(start)};
  rs.states.push_back(canonicalize(start));
  std::deque<std::pair<PProc, int>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [cur, round] = frontier.front();
    frontier.pop_front();
    if (round >= b.reach_depth) {
      // can another round fire at all?
      bool c1 = true;
      if (!weak_labelled(cur, first, b.reach_depth, &c1).empty() || !c1)
        rs.complete = false;
      continue;
    }
    bool c1 = true, c2 = true;
    for (const auto& mid : weak_labelled(cur, first, b.reach_depth, &c1)) {
      for (const auto& nxt : weak_labelled(mid, second, b.reach_depth, &c2)) {
        if (!seen.insert(serialize(nxt)).second) continue;
        rs.states.push_back(canonicalize(nxt));
        rs.depth_used = std::max(rs.depth_used, round + 1);
        frontier.emplace_back(nxt, round + 1);
      }
    }
    if (!c1 || !c2) rs.complete = false;
  }
  return rs;
}

}  // namespace ambient
