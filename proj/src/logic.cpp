#include "ambient/logic.hpp"

#include <map>
#include <mutex>

#include "ambient/derived.hpp"
#include "ambient/enumerate.hpp"

namespace ambient {

Verdict vnot(Verdict a) {
  if (a.is_true()) return Verdict::no();
  if (a.is_false()) return Verdict::yes();
  return a;
}

Verdict vor(Verdict a, Verdict b) {
  if (a.is_true() || b.is_true()) return Verdict::yes();
  if (a.is_false() && b.is_false()) return Verdict::no();
  return Verdict::unknown(a.definite() ? b.reason : a.reason);
}

Verdict vand(Verdict a, Verdict b) { return vnot(vor(vnot(a), vnot(b))); }

namespace {

// shared, memoized context enumerations (Guarantee search, models)
const std::vector<PProc>& cached_processes(std::vector<std::string> alphabet,
                                           int max_size) {
  static std::map<std::string, std::shared_ptr<const std::vector<PProc>>> cache;
  static std::mutex mx;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::string key = std::to_string(max_size);
  for (const auto& n : alphabet) key += "," + n;
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto made = std::make_shared<const std::vector<PProc>>(
      enumerate_processes(alphabet, max_size, true, true));
  std::lock_guard<std::mutex> lk(mx);
  return *cache.emplace(key, made).first->second;
}

std::vector<std::string> fresh_block(const std::set<std::string>& avoid, int count) {
  std::vector<std::string> out;
  std::set<std::string> used = avoid;
  for (int i = 0; i < count; ++i) {
    std::string f = fresh_name(used);
    used.insert(f);
    out.push_back(f);
  }
  return out;
}

// conservative upper bound on the canonical size of any model of a, when one
// is derivable from the spatial structure
std::optional<int> model_bound(const FProc& a) {
  if (a->sugar == FSugar::False) return 0;
  if (a->sugar == FSugar::And) {
    auto l = model_bound(a->left->left->left);
    auto r = model_bound(a->left->right->left);
    if (l && r) return std::min(*l, *r);
    return l ? l : r;
  }
  switch (a->kind) {
    case FKind::Void:
      return 1;
    case FKind::AmbF: {
      auto b = model_bound(a->left);
      return b ? std::optional<int>(*b + 1) : std::nullopt;
    }
    case FKind::ParF: {
      auto l = model_bound(a->left), r = model_bound(a->right);
      if (l && r) return *l + *r + 1;
      return std::nullopt;
    }
    case FKind::Or: {
      auto l = model_bound(a->left), r = model_bound(a->right);
      if (l && r) return std::max(*l, *r);
      return std::nullopt;
    }
    case FKind::At: {
      auto b = model_bound(a->left);
      if (b && *b >= 2) return *b - 1;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

struct Checker {
  Budget b;
  WitnessProvider* w;
  bool lemmas;
  std::map<std::string, Verdict>* memo;

  Verdict run(const PProc& p, const FProc& a) {
    std::string key;
    if (memo) {
      key = canonical_key(p);
      key += '#';
      key += serialize(a);
      auto it = memo->find(key);
      if (it != memo->end()) return it->second;
    }
    Verdict v = eval(p, a);
    if (memo) memo->emplace(std::move(key), v);
    return v;
  }

  Verdict eval(const PProc& p, const FProc& a) {
    if (lemmas && closed(a)) {
      if (auto v = lemma_eval(p, a, b, w)) return *v;
    }
    switch (a->kind) {
      case FKind::True:
        return Verdict::yes();
      case FKind::Not:
        return vnot(run(p, a->left));
      case FKind::Or:
        return vor(run(p, a->left), run(p, a->right));
      case FKind::Forall: {
        std::set<std::string> avoid = free_names(p);
        for (const auto& n : free_names(a)) avoid.insert(n);
        std::vector<std::string> names(avoid.begin(), avoid.end());
        for (const auto& f : fresh_block(avoid, std::max(1, b.extra_fresh)))
          names.push_back(f);
        Verdict v = Verdict::yes();
        for (const auto& n : names) v = vand(v, run(p, substitute(a->left, 0, n)));
        return v;
      }
      case FKind::Sometime: {
        ReachSet rs = reachable(p, b.reach_depth);
        Verdict v = Verdict::no();
        for (const auto& s : rs.states) {
          v = vor(v, run(to_process(s), a->left));
          if (v.is_true()) return v;
        }
        if (!rs.complete) return Verdict::unknown(VReason::Reach);
        return v;
      }
      case FKind::Void:
        return Verdict::of(canonicalize(p).plain.empty() && canonicalize(p).repl.empty());
      case FKind::AmbF: {
        CanonicalForm cf = canonicalize(p);
        if (!cf.repl.empty() || cf.plain.size() != 1 ||
            cf.plain[0].kind != PKind::Amb || !(cf.plain[0].name == a->name))
          return Verdict::no();
        return run(to_process(*cf.plain[0].body), a->left);
      }
      case FKind::ParF:
        return eval_par(p, a);
      case FKind::At:
        return run(amb(a->name, p), a->left);
      case FKind::Guarantee:
        return eval_guarantee(p, a);
    }
    return Verdict::unknown(VReason::Context);
  }

  Verdict eval_par(const PProc& p, const FProc& a) {
    CanonicalForm cf = canonicalize(p);
    const auto& plain = cf.plain;
    const auto& replv = cf.repl;
    if (plain.size() > 14) return Verdict::unknown(VReason::Spawn);

    // per-replicated-component split options:
    // (inLeft, inRight, plain copies left, plain copies right)
    struct Opt { bool l, r; int cl, cr; };
    std::vector<Opt> opts{{true, false, 0, 0}, {false, true, 0, 0}, {true, true, 0, 0}};
    for (int k = 1; k <= b.spawn_bound; ++k) {
      opts.push_back({true, true, k, 0});
      opts.push_back({true, true, 0, k});
      opts.push_back({true, false, 0, k});
      opts.push_back({false, true, k, 0});
    }

    size_t nOpts = 1;
    for (size_t i = 0; i < replv.size(); ++i) {
      nOpts *= opts.size();
      if (nOpts > 100000) return Verdict::unknown(VReason::Spawn);
    }

    Verdict acc = Verdict::no();
    for (size_t mask = 0; mask < (size_t(1) << plain.size()); ++mask) {
      for (size_t combo = 0; combo < nOpts; ++combo) {
        std::vector<CanonicalSingle> lp, rp, lr, rr;
        for (size_t i = 0; i < plain.size(); ++i)
          ((mask >> i) & 1 ? rp : lp).push_back(plain[i]);
        size_t c = combo;
        for (size_t i = 0; i < replv.size(); ++i) {
          const Opt& o = opts[c % opts.size()];
          c /= opts.size();
          if (o.l) lr.push_back(replv[i]);
          if (o.r) rr.push_back(replv[i]);
          for (int k = 0; k < o.cl; ++k) lp.push_back(replv[i]);
          for (int k = 0; k < o.cr; ++k) rp.push_back(replv[i]);
        }
        PProc left = to_process(make_canonical(std::move(lp), std::move(lr)));
        PProc right = to_process(make_canonical(std::move(rp), std::move(rr)));
        Verdict v = vand(run(left, a->left), run(right, a->right));
        if (v.is_true()) return v;
        acc = vor(acc, v);
      }
    }
    if (!replv.empty()) return Verdict::unknown(VReason::Spawn);
    return acc;
  }

  Verdict eval_guarantee(const PProc& p, const FProc& a) {
    const FProc& A = a->left;
    const FProc& B = a->right;
    bool sawUnknown = false;

    if (w) {
      for (const auto& R : w->candidates(A, p)) {
        if (!R || !closed(R)) continue;
        if (!run(R, A).is_true()) continue;  // never trusted
        if (run(par(p, R), B).is_false()) return Verdict::no();
      }
    }

    auto bound = model_bound(A);
    bool canExhaust = bound && *bound <= std::min(b.context_size, 4);
    int searchMax = canExhaust ? *bound : std::min(b.context_size, 4);

    std::set<std::string> names = free_names(p);
    for (const auto& n : free_names(a)) names.insert(n);
    std::vector<std::string> alphabet(names.begin(), names.end());
    for (const auto& f : fresh_block(names, std::max(1, b.extra_fresh)))
      alphabet.push_back(f);

    for (const auto& R : cached_processes(alphabet, searchMax)) {
      Verdict va = run(R, A);
      if (!va.definite()) {
        sawUnknown = true;
        continue;
      }
      if (va.is_false()) continue;
      Verdict vb = run(par(p, R), B);
      if (vb.is_false()) return Verdict::no();
      if (!vb.definite()) sawUnknown = true;
    }
    if (canExhaust && !sawUnknown) return Verdict::yes();
    return Verdict::unknown(VReason::Context);
  }
};

}  // namespace

Verdict check(const PProc& p, const FProc& a, const Budget& b, WitnessProvider* w,
              bool use_lemmas) {
  if (!closed(p)) throw std::invalid_argument("check: open process");
  if (!closed(a)) throw std::invalid_argument("check: open formula");
  if (b.reach_depth < 0 || b.spawn_bound < 0 || b.context_size < 0 ||
      b.extra_fresh < 0)
    throw std::invalid_argument("check: invalid budget");
  std::map<std::string, Verdict> memo;
  Checker c{b, w, use_lemmas, &memo};
  return c.run(p, a);
}

ModelsResult models(const FProc& a, int max_size, const Budget& b,
                    std::vector<std::string> alphabet) {
  if (alphabet.empty()) {
    std::set<std::string> fn = free_names(a);
    alphabet.assign(fn.begin(), fn.end());
    for (const auto& f : fresh_block(fn, std::max(1, b.extra_fresh)))
      alphabet.push_back(f);
  }
  ModelsResult out;
  for (const auto& p : cached_processes(alphabet, max_size)) {
    Verdict v = check(p, a, b);
    if (v.is_true())
      out.models.push_back(p);
    else if (!v.definite())
      out.exhaustive = false;
  }
  return out;
}

}  // namespace ambient
