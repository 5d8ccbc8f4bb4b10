#include "ambient/congruence.hpp"

#include <algorithm>

namespace ambient {

int cmp(const CanonicalSingle& a, const CanonicalSingle& b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  int c = 0;
  switch (a.kind) {
    case PKind::Prefix:
      c = cmp(a.cap, b.cap);
      break;
    case PKind::Amb:
    case PKind::Msg:
      c = cmp(a.name, b.name);
      break;
    default:
      break;
  }
  if (c != 0) return c;
  if (!a.body) return b.body ? -1 : 0;
  if (!b.body) return 1;
  return cmp(*a.body, *b.body);
}

int cmp(const CanonicalForm& a, const CanonicalForm& b) {
  auto vec = [](const std::vector<CanonicalSingle>& x,
                const std::vector<CanonicalSingle>& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
      int c = cmp(x[i], y[i]);
      if (c != 0) return c;
    }
    return x.size() < y.size() ? -1 : x.size() > y.size() ? 1 : 0;
  };
  int c = vec(a.plain, b.plain);
  return c != 0 ? c : vec(a.repl, b.repl);
}

CanonicalForm make_canonical(std::vector<CanonicalSingle> plain,
                             std::vector<CanonicalSingle> repl) {
  auto lt = [](const CanonicalSingle& a, const CanonicalSingle& b) {
    return cmp(a, b) < 0;
  };
  std::sort(repl.begin(), repl.end(), lt);
  repl.erase(std::unique(repl.begin(), repl.end(),
                         [](const CanonicalSingle& a, const CanonicalSingle& b) {
                           return cmp(a, b) == 0;
                         }),
             repl.end());
  // absorption: !P | P == !P
  plain.erase(std::remove_if(plain.begin(), plain.end(),
                             [&](const CanonicalSingle& s) {
                               return std::binary_search(repl.begin(), repl.end(), s, lt);
                             }),
              plain.end());
  std::sort(plain.begin(), plain.end(), lt);
  return CanonicalForm{std::move(plain), std::move(repl)};
}

CanonicalSingle canonical_single(const PProc& p) {
  CanonicalSingle s;
  s.kind = p->kind;
  switch (p->kind) {
    case PKind::Prefix:
      s.cap = p->cap;
      s.body = std::make_shared<CanonicalForm>(canonicalize(p->left));
      break;
    case PKind::Amb:
      s.name = p->name;
      s.body = std::make_shared<CanonicalForm>(canonicalize(p->left));
      break;
    case PKind::Msg:
      s.name = p->name;
      break;
    case PKind::Abs:
      s.hint = p->hint;
      s.body = std::make_shared<CanonicalForm>(canonicalize(p->left));
      break;
    default:
      throw std::logic_error("canonical_single: composite process");
  }
  return s;
}

static void collect(const PProc& p, bool underRepl,
                    std::vector<CanonicalSingle>& plain,
                    std::vector<CanonicalSingle>& repl) {
  switch (p->kind) {
    case PKind::Nil:
      return;  // P | 0 == P, !0 == 0
    case PKind::Par:  // !(P|Q) == !P | !Q when underRepl
      collect(p->left, underRepl, plain, repl);
      collect(p->right, underRepl, plain, repl);
      return;
    case PKind::Repl:  // !!P == !P
      collect(p->left, true, plain, repl);
      return;
    default:
      (underRepl ? repl : plain).push_back(canonical_single(p));
  }
}

CanonicalForm canonicalize(const PProc& p) {
  std::vector<CanonicalSingle> plain, repl;
  collect(p, false, plain, repl);
  return make_canonical(std::move(plain), std::move(repl));
}

PProc to_process(const CanonicalSingle& s) {
  switch (s.kind) {
    case PKind::Prefix:
      return prefix(s.cap, to_process(*s.body));
    case PKind::Amb:
      return amb(s.name, to_process(*s.body));
    case PKind::Msg:
      return msg(s.name);
    case PKind::Abs:
      return abs(s.hint, to_process(*s.body));
    default:
      throw std::logic_error("to_process: bad single");
  }
}

PProc to_process(const CanonicalForm& cf) {
  std::vector<PProc> parts;
  for (const auto& s : cf.plain) parts.push_back(to_process(s));
  for (const auto& s : cf.repl) parts.push_back(repl(to_process(s)));
  if (parts.empty()) return nil();
  PProc out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) out = par(parts[i], out);
  return out;
}

std::string canonical_key(const PProc& p) {
  return serialize(to_process(canonicalize(p)));
}

bool congruent(const PProc& p, const PProc& q) {
  return cmp(canonicalize(p), canonicalize(q)) == 0;
}

// ---------------------------------------------------------------------------
// Eta normalization: (x)(<x> | (x)P) --> (x)P, checked modulo == on the body.

static bool uses_var(const PProc& p, int index, int depth = 0) {
  auto hit = [&](const NameRef& r) { return r.var && r.index == index + depth; };
  switch (p->kind) {
    case PKind::Nil:
      return false;
    case PKind::Par:
      return uses_var(p->left, index, depth) || uses_var(p->right, index, depth);
    case PKind::Repl:
      return uses_var(p->left, index, depth);
    case PKind::Prefix:
      return hit(p->cap.target) || uses_var(p->left, index, depth);
    case PKind::Amb:
      return hit(p->name) || uses_var(p->left, index, depth);
    case PKind::Msg:
      return hit(p->name);
    case PKind::Abs:
      return uses_var(p->left, index, depth + 1);
  }
  return false;
}

PProc eta_normalize(const PProc& p) {
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Msg:
      return p;
    case PKind::Par:
      return par(eta_normalize(p->left), eta_normalize(p->right));
    case PKind::Repl:
      return repl(eta_normalize(p->left));
    case PKind::Prefix:
      return prefix(p->cap, eta_normalize(p->left));
    case PKind::Amb:
      return amb(p->name, eta_normalize(p->left));
    case PKind::Abs: {
      PProc cur = abs(p->hint, eta_normalize(p->left));
      for (;;) {
        CanonicalForm body = canonicalize(cur->left);
        if (!body.repl.empty() || body.plain.size() != 2) break;
        // components are sorted: Msg < Abs by constructor tag
        const CanonicalSingle& m = body.plain[0];
        const CanonicalSingle& a = body.plain[1];
        if (m.kind != PKind::Msg || a.kind != PKind::Abs) break;
        if (!(m.name == NameRef::variable(0))) break;
        PProc inner = to_process(a);  // (x)P, may still mention the outer binder
        if (uses_var(inner, 0)) break;
        // drop the unused outer binder (shifts deeper indices down)
        cur = substitute(inner, 0, "#eta");
      }
      return cur;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Beta normalization: <M> | (x)Q --> Q{M/x}, modulo == at every level.
// Only plain abstractions are consumed (a replicated abstraction regenerates
// itself, so rewriting it would not terminate); the message side may come
// from a replicated message, which keeps its replica.

PProc beta_normalize(const PProc& p) {
  CanonicalForm cf = canonicalize(p);
  std::vector<CanonicalSingle> plain, replv;
  auto norm_single = [](const CanonicalSingle& s) {
    if (s.kind == PKind::Msg) return s;
    CanonicalSingle t = s;
    t.body = std::make_shared<CanonicalForm>(
        canonicalize(beta_normalize(to_process(*s.body))));
    return t;
  };
  for (const auto& s : cf.plain) plain.push_back(norm_single(s));
  for (const auto& s : cf.repl) replv.push_back(norm_single(s));
  cf = make_canonical(std::move(plain), std::move(replv));

  for (;;) {
    size_t absIdx = cf.plain.size();
    for (size_t i = 0; i < cf.plain.size(); ++i)
      if (cf.plain[i].kind == PKind::Abs) { absIdx = i; break; }
    if (absIdx == cf.plain.size()) return to_process(cf);

    size_t msgIdx = cf.plain.size();
    bool msgFromRepl = false;
    for (size_t i = 0; i < cf.plain.size(); ++i)
      if (cf.plain[i].kind == PKind::Msg) { msgIdx = i; break; }
    if (msgIdx == cf.plain.size()) {
      for (size_t i = 0; i < cf.repl.size(); ++i)
        if (cf.repl[i].kind == PKind::Msg) { msgIdx = i; msgFromRepl = true; break; }
    }
    if (!msgFromRepl && msgIdx == cf.plain.size()) return to_process(cf);

    NameRef payload = msgFromRepl ? cf.repl[msgIdx].name : cf.plain[msgIdx].name;
    PProc opened = substitute_ref(to_process(*cf.plain[absIdx].body), 0, payload);
    opened = beta_normalize(opened);

    std::vector<CanonicalSingle> np = cf.plain;
    np.erase(np.begin() + static_cast<long>(absIdx));
    if (!msgFromRepl) {
      size_t j = msgIdx > absIdx ? msgIdx - 1 : msgIdx;
      np.erase(np.begin() + static_cast<long>(j));
    }
    CanonicalForm rest = canonicalize(opened);
    np.insert(np.end(), rest.plain.begin(), rest.plain.end());
    std::vector<CanonicalSingle> nr = cf.repl;
    nr.insert(nr.end(), rest.repl.begin(), rest.repl.end());
    cf = make_canonical(std::move(np), std::move(nr));
  }
}

// ---------------------------------------------------------------------------
// Measures

int sd(const PProc& p) {
  switch (p->kind) {
    case PKind::Nil:
      return 0;
    case PKind::Par:
      return std::max(sd(p->left), sd(p->right));
    case PKind::Repl:
    case PKind::Amb:
      return sd(p->left);
    case PKind::Prefix:
      return sd(p->left) + 1;
    case PKind::Msg:
      return 1;
    case PKind::Abs:
      return sd(beta_normalize(p->left)) + 1;
  }
  return 0;
}

int dd(const PProc& p) {
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Prefix:
    case PKind::Msg:
    case PKind::Abs:
      return 0;
    case PKind::Par:
      return std::max(dd(p->left), dd(p->right));
    case PKind::Repl:
      return dd(p->left);
    case PKind::Amb:
      return dd(p->left) + 1;
  }
  return 0;
}

static Depth dplus(Depth d) { return d ? Depth(*d + 1) : d; }
static Depth dmin(Depth a, Depth b) {
  if (!a) return b;
  if (!b) return a;
  return Depth(std::min(*a, *b));
}

Depth depth_n(const PProc& p, const std::string& n) {
  auto is_n = [&](const NameRef& r) { return !r.var && r.text == n; };
  switch (p->kind) {
    case PKind::Nil:
      return std::nullopt;
    case PKind::Par:
      return dmin(depth_n(p->left, n), depth_n(p->right, n));
    case PKind::Repl:
      return depth_n(p->left, n);
    case PKind::Prefix:
      if (is_n(p->cap.target)) return 0;
      return dplus(depth_n(p->left, n));
    case PKind::Amb:
      if (is_n(p->name)) return 0;
      return dplus(depth_n(p->left, n));
    case PKind::Msg:
      return is_n(p->name) ? Depth(0) : std::nullopt;
    case PKind::Abs:
      return dplus(depth_n(beta_normalize(p->left), n));
  }
  return std::nullopt;
}

static bool cf_repl_free(const CanonicalForm& cf) {
  if (!cf.repl.empty()) return false;
  for (const auto& s : cf.plain)
    if (s.body && !cf_repl_free(*s.body)) return false;
  return true;
}

bool is_finite(const PProc& p) { return cf_repl_free(canonicalize(p)); }

bool is_single(const PProc& p) {
  CanonicalForm cf = canonicalize(p);
  if (!cf.repl.empty() || cf.plain.size() != 1) return false;
  PKind k = cf.plain[0].kind;
  return k == PKind::Prefix || k == PKind::Amb || k == PKind::Abs;
}

}  // namespace ambient
