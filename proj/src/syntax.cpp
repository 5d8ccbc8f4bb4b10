#include "ambient/syntax.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace ambient {

int cmp(const NameRef& a, const NameRef& b) {
  if (a.var != b.var) return a.var ? -1 : 1;
  if (a.var) return a.index < b.index ? -1 : a.index > b.index ? 1 : 0;
  return a.text.compare(b.text) < 0 ? -1 : a.text == b.text ? 0 : 1;
}

int cmp(const Capability& a, const Capability& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  return cmp(a.target, b.target);
}

static PProc make(PKind k) {
  auto p = std::make_shared<Process>();
  p->kind = k;
  return p;
}

PProc nil() {
  static const PProc n = make(PKind::Nil);
  return n;
}

PProc par(PProc a, PProc b) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Par;
  p->left = std::move(a);
  p->right = std::move(b);
  return p;
}

PProc repl(PProc body) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Repl;
  p->left = std::move(body);
  return p;
}

PProc prefix(Capability c, PProc body) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Prefix;
  p->cap = std::move(c);
  p->left = std::move(body);
  return p;
}

PProc amb(NameRef n, PProc body) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Amb;
  p->name = std::move(n);
  p->left = std::move(body);
  return p;
}

PProc msg(NameRef payload) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Msg;
  p->name = std::move(payload);
  return p;
}

PProc abs(std::string hint, PProc body) {
  auto p = std::make_shared<Process>();
  p->kind = PKind::Abs;
  p->hint = std::move(hint);
  p->left = std::move(body);
  return p;
}

int cmp(const PProc& a, const PProc& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case PKind::Nil:
      return 0;
    case PKind::Par: {
      int c = cmp(a->left, b->left);
      return c != 0 ? c : cmp(a->right, b->right);
    }
    case PKind::Repl:
    case PKind::Abs:
      return cmp(a->left, b->left);
    case PKind::Prefix: {
      int c = cmp(a->cap, b->cap);
      return c != 0 ? c : cmp(a->left, b->left);
    }
    case PKind::Amb: {
      int c = cmp(a->name, b->name);
      return c != 0 ? c : cmp(a->left, b->left);
    }
    case PKind::Msg:
      return cmp(a->name, b->name);
  }
  return 0;
}

int node_count(const PProc& p) {
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Msg:
      return 1;
    case PKind::Par:
      return 1 + node_count(p->left) + node_count(p->right);
    default:
      return 1 + node_count(p->left);
  }
}

static void serialize_ref(const NameRef& r, std::string& out) {
  if (r.var) {
    out += 'v';
    out += std::to_string(r.index);
  } else {
    out += 'n';
    out += r.text;
  }
  out += ';';
}

static void serialize_rec(const PProc& p, std::string& out) {
  switch (p->kind) {
    case PKind::Nil:
      out += '0';
      break;
    case PKind::Par:
      out += '(';
      serialize_rec(p->left, out);
      out += '|';
      serialize_rec(p->right, out);
      out += ')';
      break;
    case PKind::Repl:
      out += '!';
      serialize_rec(p->left, out);
      break;
    case PKind::Prefix:
      out += p->cap.kind == CapKind::In ? 'i' : p->cap.kind == CapKind::Out ? 'u' : 'p';
      serialize_ref(p->cap.target, out);
      serialize_rec(p->left, out);
      break;
    case PKind::Amb:
      out += 'a';
      serialize_ref(p->name, out);
      out += '[';
      serialize_rec(p->left, out);
      out += ']';
      break;
    case PKind::Msg:
      out += 'm';
      serialize_ref(p->name, out);
      break;
    case PKind::Abs:
      out += 'L';
      serialize_rec(p->left, out);
      break;
  }
}

std::string serialize(const PProc& p) {
  std::string out;
  serialize_rec(p, out);
  return out;
}

static bool closed_rec(const PProc& p, int depth) {
  auto ok = [&](const NameRef& r) { return !r.var || r.index < depth; };
  switch (p->kind) {
    case PKind::Nil:
      return true;
    case PKind::Par:
      return closed_rec(p->left, depth) && closed_rec(p->right, depth);
    case PKind::Repl:
      return closed_rec(p->left, depth);
    case PKind::Prefix:
      return ok(p->cap.target) && closed_rec(p->left, depth);
    case PKind::Amb:
      return ok(p->name) && closed_rec(p->left, depth);
    case PKind::Msg:
      return ok(p->name);
    case PKind::Abs:
      return closed_rec(p->left, depth + 1);
  }
  return true;
}

bool closed(const PProc& p) { return closed_rec(p, 0); }

static void free_names_rec(const PProc& p, std::set<std::string>& out) {
  auto add = [&](const NameRef& r) {
    if (!r.var) out.insert(r.text);
  };
  switch (p->kind) {
    case PKind::Nil:
      break;
    case PKind::Par:
      free_names_rec(p->left, out);
      free_names_rec(p->right, out);
      break;
    case PKind::Repl:
    case PKind::Abs:
      free_names_rec(p->left, out);
      break;
    case PKind::Prefix:
      add(p->cap.target);
      free_names_rec(p->left, out);
      break;
    case PKind::Amb:
      add(p->name);
      free_names_rec(p->left, out);
      break;
    case PKind::Msg:
      add(p->name);
      break;
  }
}

std::set<std::string> free_names(const PProc& p) {
  std::set<std::string> out;
  free_names_rec(p, out);
  return out;
}

// Substitutes variable `index` (at binding depth 0) by `r`, removing that
// binder position: deeper free variables shift down by one.
static NameRef subst_target(const NameRef& cur, int index, const NameRef& r, int depth) {
  if (!cur.var) return cur;
  if (cur.index == index + depth) {
    if (!r.var) return r;
    return NameRef::variable(r.index + depth, r.text);
  }
  if (cur.index > index + depth) return NameRef::variable(cur.index - 1, cur.text);
  return cur;
}

static PProc subst_rec(const PProc& p, int index, const NameRef& r, int depth) {
  switch (p->kind) {
    case PKind::Nil:
      return p;
    case PKind::Par:
      return par(subst_rec(p->left, index, r, depth), subst_rec(p->right, index, r, depth));
    case PKind::Repl:
      return repl(subst_rec(p->left, index, r, depth));
    case PKind::Prefix:
      return prefix(Capability{p->cap.kind, subst_target(p->cap.target, index, r, depth)},
                    subst_rec(p->left, index, r, depth));
    case PKind::Amb:
      return amb(subst_target(p->name, index, r, depth), subst_rec(p->left, index, r, depth));
    case PKind::Msg:
      return msg(subst_target(p->name, index, r, depth));
    case PKind::Abs:
      return abs(p->hint, subst_rec(p->left, index, r, depth + 1));
  }
  return p;
}

PProc substitute_ref(const PProc& p, int index, const NameRef& r) {
  return subst_rec(p, index, r, 0);
}

PProc substitute(const PProc& p, int index, const std::string& n) {
  return substitute_ref(p, index, NameRef::name(n));
}

PProc open_abs(const PProc& absBody, const std::string& n) {
  return substitute(absBody, 0, n);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

struct PrintEnv {
  const std::set<std::string>* avoid;  // free names of the whole term
  std::vector<std::string> binders;    // innermost at the back

  std::string pick(const std::string& hint) const {
    std::string base = hint.empty() || hint[0] == '#' ? "x" : hint;
    std::string cand = base;
    int k = 1;
    auto used = [&](const std::string& s) {
      if (avoid->count(s)) return true;
      return std::find(binders.begin(), binders.end(), s) != binders.end();
    };
    while (used(cand)) cand = base + std::to_string(k++);
    return cand;
  }

  std::string ref(const NameRef& r) const {
    if (!r.var) return r.text;
    int pos = static_cast<int>(binders.size()) - 1 - r.index;
    if (pos < 0) return "?" + std::to_string(r.index);  // open term; diagnostic only
    return binders[static_cast<size_t>(pos)];
  }
};

void print_rec(const PProc& p, PrintEnv& env, bool atom, std::string& out) {
  switch (p->kind) {
    case PKind::Nil:
      out += '0';
      break;
    case PKind::Par: {
      if (atom) out += '(';
      print_rec(p->left, env, false, out);
      out += " | ";
      print_rec(p->right, env, false, out);
      if (atom) out += ')';
      break;
    }
    case PKind::Repl:
      out += '!';
      print_rec(p->left, env, true, out);
      break;
    case PKind::Prefix: {
      switch (p->cap.kind) {
        case CapKind::In: out += "in "; break;
        case CapKind::Out: out += "out "; break;
        case CapKind::Open: out += "open "; break;
      }
      out += env.ref(p->cap.target);
      if (p->left->kind != PKind::Nil) {
        out += '.';
        print_rec(p->left, env, true, out);
      }
      break;
    }
    case PKind::Amb:
      out += env.ref(p->name);
      out += '[';
      print_rec(p->left, env, false, out);
      out += ']';
      break;
    case PKind::Msg:
      out += '<';
      out += env.ref(p->name);
      out += '>';
      break;
    case PKind::Abs: {
      std::string b = env.pick(p->hint);
      out += '(';
      out += b;
      out += ')';
      env.binders.push_back(b);
      print_rec(p->left, env, true, out);
      env.binders.pop_back();
      break;
    }
  }
}

}  // namespace

std::string print_process(const PProc& p) {
  auto fn = free_names(p);
  PrintEnv env{&fn, {}};
  std::string out;
  print_rec(p, env, false, out);
  return out;
}

// ---------------------------------------------------------------------------
// Lexing (shared by both parsers)

namespace {

enum class Tok {
  End, Zero, Bang, Dot, Pipe, LBrack, RBrack, LParen, RParen, Lt, Gt, Id,
  KwIn, KwOut, KwOpen,
  // formula-only tokens
  TrueT, FalseT, Tilde, OrOp, AndOp, Arrow, KwForall, KwExists, Diamond, BoxOp,
  At, Guar, CoGuar,
};

struct Token {
  Tok t;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1, col = 1;
  bool formula;
  std::vector<Token> toks;

  explicit Lexer(const std::string& s, bool formulaMode) : src(s), formula(formulaMode) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void bump(size_t n = 1) {
    for (size_t k = 0; k < n && i < src.size(); ++k) {
      if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
      ++i;
    }
  }

  bool startsWith(const char* s) const {
    return src.compare(i, std::strlen(s), s) == 0;
  }

  void run() {
    while (i < src.size()) {
      char c = src[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { bump(); continue; }
      int tl = line, tc = col;
      auto push = [&](Tok t, std::string tx = "", size_t adv = 1) {
        toks.push_back(Token{t, std::move(tx), tl, tc});
        bump(adv);
      };
      if (c == '#') fail("names in the reserved '#' namespace cannot be written");
      if (formula) {
        if (startsWith("\\/")) { push(Tok::OrOp, "", 2); continue; }
        if (startsWith("/\\")) { push(Tok::AndOp, "", 2); continue; }
        if (startsWith("->")) { push(Tok::Arrow, "", 2); continue; }
        if (startsWith("<>")) { push(Tok::Diamond, "", 2); continue; }
        if (startsWith("[]")) { push(Tok::BoxOp, "", 2); continue; }
        if (startsWith("|>>")) { push(Tok::CoGuar, "", 3); continue; }
        if (startsWith("|>")) { push(Tok::Guar, "", 2); continue; }
        if (c == '~') { push(Tok::Tilde); continue; }
        if (c == '@') { push(Tok::At); continue; }
        if (c == 'T' ) { push(Tok::TrueT); continue; }
        if (c == 'F' ) { push(Tok::FalseT); continue; }
      }
      switch (c) {
        case '0': push(Tok::Zero); continue;
        case '!': push(Tok::Bang); continue;
        case '.': push(Tok::Dot); continue;
        case '|': push(Tok::Pipe); continue;
        case '[': push(Tok::LBrack); continue;
        case ']': push(Tok::RBrack); continue;
        case '(': push(Tok::LParen); continue;
        case ')': push(Tok::RParen); continue;
        case '<': push(Tok::Lt); continue;
        case '>': push(Tok::Gt); continue;
        default: break;
      }
      if (c >= 'a' && c <= 'z') {
        size_t j = i;
        while (j < src.size() &&
               ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
          ++j;
        std::string id = src.substr(i, j - i);
        Tok t = Tok::Id;
        if (id == "in") t = Tok::KwIn;
        else if (id == "out") t = Tok::KwOut;
        else if (id == "open") t = Tok::KwOpen;
        else if (formula && id == "forall") t = Tok::KwForall;
        else if (formula && id == "exists") t = Tok::KwExists;
        push(t, id, j - i);
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    toks.push_back(Token{Tok::End, "", line, col});
  }
};

struct ProcParser {
  std::vector<Token> toks;
  size_t pos = 0;
  std::vector<std::string> scope;  // innermost at back

  const Token& cur() const { return toks[pos]; }
  const Token& peek(size_t k) const { return toks[std::min(pos + k, toks.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, cur().line, cur().col);
  }
  Token expect(Tok t, const std::string& what) {
    if (cur().t != t) fail("expected " + what);
    return toks[pos++];
  }

  NameRef resolve(const std::string& id) {
    for (int k = static_cast<int>(scope.size()) - 1; k >= 0; --k)
      if (scope[static_cast<size_t>(k)] == id)
        return NameRef::variable(static_cast<int>(scope.size()) - 1 - k, id);
    return NameRef::name(id);
  }

  static bool startsProcess(Tok t) {
    switch (t) {
      case Tok::Zero: case Tok::Bang: case Tok::Id: case Tok::LParen:
      case Tok::Lt: case Tok::KwIn: case Tok::KwOut: case Tok::KwOpen:
        return true;
      default:
        return false;
    }
  }

  PProc parsePar() {
    PProc p = parseAtom();
    while (cur().t == Tok::Pipe) {
      ++pos;
      p = par(p, parseAtom());
    }
    return p;
  }

  PProc parseCap(CapKind kind) {
    ++pos;  // keyword
    Token id = expect(Tok::Id, "a name after capability keyword");
    // "in c" with no dot abbreviates "in c.0"
    if (cur().t != Tok::Dot) return prefix(Capability{kind, resolve(id.text)}, nil());
    ++pos;
    return prefix(Capability{kind, resolve(id.text)}, parseAtom());
  }

  PProc parseAtom() {
    switch (cur().t) {
      case Tok::Zero:
        ++pos;
        return nil();
      case Tok::Bang:
        ++pos;
        return repl(parseAtom());
      case Tok::KwIn: return parseCap(CapKind::In);
      case Tok::KwOut: return parseCap(CapKind::Out);
      case Tok::KwOpen: return parseCap(CapKind::Open);
      case Tok::Lt: {
        ++pos;
        Token id = expect(Tok::Id, "a name inside '<...>'");
        expect(Tok::Gt, "'>' closing the message");
        return msg(resolve(id.text));
      }
      case Tok::Id: {
        Token id = toks[pos++];
        expect(Tok::LBrack, "'[' after ambient name");
        PProc body = parsePar();
        expect(Tok::RBrack, "']' closing the ambient");
        return amb(resolve(id.text), body);
      }
      case Tok::LParen: {
        if (peek(1).t == Tok::Id && peek(2).t == Tok::RParen &&
            startsProcess(peek(3).t)) {
          ++pos;
          Token id = toks[pos++];
          ++pos;  // ')'
          scope.push_back(id.text);
          PProc body = parseAtom();
          scope.pop_back();
          return abs(id.text, body);
        }
        ++pos;
        PProc p = parsePar();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail("expected a process");
    }
  }
};

}  // namespace

PProc parse_process(const std::string& text) {
  Lexer lx(text, false);
  lx.run();
  ProcParser pp{std::move(lx.toks)};
  PProc p = pp.parsePar();
  if (pp.cur().t != Tok::End)
    throw ParseError("trailing input after process", pp.cur().line, pp.cur().col);
  return p;
}

// ---------------------------------------------------------------------------
// Formulas

static std::shared_ptr<Formula> fmake(FKind k, FSugar sugar = FSugar::None) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->sugar = sugar;
  return f;
}

FProc f_true() {
  static const FProc t = fmake(FKind::True);
  return t;
}

FProc f_not(FProc a) {
  auto f = fmake(FKind::Not);
  f->left = std::move(a);
  return f;
}

static FProc with_sugar(FProc f, FSugar s) {
  auto g = std::make_shared<Formula>(*f);
  g->sugar = s;
  return g;
}

FProc f_false() { return with_sugar(f_not(f_true()), FSugar::False); }

FProc f_or(FProc a, FProc b) {
  auto f = fmake(FKind::Or);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FProc f_and(FProc a, FProc b) {
  return with_sugar(f_not(f_or(f_not(std::move(a)), f_not(std::move(b)))), FSugar::And);
}

FProc f_implies(FProc a, FProc b) {
  return with_sugar(f_or(f_not(std::move(a)), std::move(b)), FSugar::Implies);
}

FProc f_forall(std::string hint, FProc body) {
  auto f = fmake(FKind::Forall);
  f->hint = std::move(hint);
  f->left = std::move(body);
  return f;
}

FProc f_exists(std::string hint, FProc body) {
  return with_sugar(f_not(f_forall(std::move(hint), f_not(std::move(body)))),
                    FSugar::Exists);
}

FProc f_sometime(FProc a) {
  auto f = fmake(FKind::Sometime);
  f->left = std::move(a);
  return f;
}

FProc f_box(FProc a) {
  return with_sugar(f_not(f_sometime(f_not(std::move(a)))), FSugar::Box);
}

FProc f_void() {
  static const FProc v = fmake(FKind::Void);
  return v;
}

FProc f_amb(NameRef n, FProc a) {
  auto f = fmake(FKind::AmbF);
  f->name = std::move(n);
  f->left = std::move(a);
  return f;
}

FProc f_par(FProc a, FProc b) {
  auto f = fmake(FKind::ParF);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FProc f_at(FProc a, NameRef n) {
  auto f = fmake(FKind::At);
  f->left = std::move(a);
  f->name = std::move(n);
  return f;
}

FProc f_guarantee(FProc a, FProc b) {
  auto f = fmake(FKind::Guarantee);
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FProc f_coguarantee(FProc a, FProc b) {
  return with_sugar(f_not(f_guarantee(std::move(a), f_not(std::move(b)))),
                    FSugar::CoGuarantee);
}

int cmp(const FProc& a, const FProc& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  int c = 0;
  switch (a->kind) {
    case FKind::True:
    case FKind::Void:
      return 0;
    case FKind::Not:
    case FKind::Forall:
    case FKind::Sometime:
      return cmp(a->left, b->left);
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      c = cmp(a->left, b->left);
      return c != 0 ? c : cmp(a->right, b->right);
    case FKind::AmbF:
      c = cmp(a->name, b->name);
      return c != 0 ? c : cmp(a->left, b->left);
    case FKind::At:
      c = cmp(a->name, b->name);
      return c != 0 ? c : cmp(a->left, b->left);
  }
  return 0;
}

int node_count(const FProc& f) {
  switch (f->kind) {
    case FKind::True:
    case FKind::Void:
      return 1;
    case FKind::Not:
    case FKind::Forall:
    case FKind::Sometime:
    case FKind::AmbF:
    case FKind::At:
      return 1 + node_count(f->left);
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      return 1 + node_count(f->left) + node_count(f->right);
  }
  return 1;
}

static void fserialize_rec(const FProc& f, std::string& out) {
  switch (f->kind) {
    case FKind::True: out += 'T'; break;
    case FKind::Void: out += 'Z'; break;
    case FKind::Not: out += '~'; fserialize_rec(f->left, out); break;
    case FKind::Forall: out += 'A'; fserialize_rec(f->left, out); break;
    case FKind::Sometime: out += 'D'; fserialize_rec(f->left, out); break;
    case FKind::Or:
      out += "(";
      fserialize_rec(f->left, out);
      out += 'v';
      fserialize_rec(f->right, out);
      out += ')';
      break;
    case FKind::ParF:
      out += '(';
      fserialize_rec(f->left, out);
      out += '|';
      fserialize_rec(f->right, out);
      out += ')';
      break;
    case FKind::Guarantee:
      out += '(';
      fserialize_rec(f->left, out);
      out += '>';
      fserialize_rec(f->right, out);
      out += ')';
      break;
    case FKind::AmbF:
      out += 'a';
      serialize_ref(f->name, out);
      out += '[';
      fserialize_rec(f->left, out);
      out += ']';
      break;
    case FKind::At:
      out += '@';
      serialize_ref(f->name, out);
      fserialize_rec(f->left, out);
      break;
  }
}

std::string serialize(const FProc& f) {
  std::string out;
  fserialize_rec(f, out);
  return out;
}

static bool fclosed_rec(const FProc& f, int depth) {
  auto ok = [&](const NameRef& r) { return !r.var || r.index < depth; };
  switch (f->kind) {
    case FKind::True:
    case FKind::Void:
      return true;
    case FKind::Not:
    case FKind::Sometime:
      return fclosed_rec(f->left, depth);
    case FKind::Forall:
      return fclosed_rec(f->left, depth + 1);
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      return fclosed_rec(f->left, depth) && fclosed_rec(f->right, depth);
    case FKind::AmbF:
    case FKind::At:
      return ok(f->name) && fclosed_rec(f->left, depth);
  }
  return true;
}

bool closed(const FProc& f) { return fclosed_rec(f, 0); }

static void ffree_rec(const FProc& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::True:
    case FKind::Void:
      break;
    case FKind::Not:
    case FKind::Forall:
    case FKind::Sometime:
      ffree_rec(f->left, out);
      break;
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      ffree_rec(f->left, out);
      ffree_rec(f->right, out);
      break;
    case FKind::AmbF:
    case FKind::At:
      if (!f->name.var) out.insert(f->name.text);
      ffree_rec(f->left, out);
      break;
  }
}

std::set<std::string> free_names(const FProc& f) {
  std::set<std::string> out;
  ffree_rec(f, out);
  return out;
}

static FProc fclone(const FProc& f, FProc l, FProc r, NameRef n) {
  auto g = std::make_shared<Formula>();
  g->kind = f->kind;
  g->sugar = f->sugar;
  g->hint = f->hint;
  g->name = std::move(n);
  g->left = std::move(l);
  g->right = std::move(r);
  return g;
}

static FProc fsubst_rec(const FProc& f, int index, const std::string& n, int depth) {
  auto fix = [&](const NameRef& r) -> NameRef {
    if (!r.var) return r;
    if (r.index == index + depth) return NameRef::name(n);
    if (r.index > index + depth) return NameRef::variable(r.index - 1, r.text);
    return r;
  };
  switch (f->kind) {
    case FKind::True:
    case FKind::Void:
      return f;
    case FKind::Not:
    case FKind::Sometime:
      return fclone(f, fsubst_rec(f->left, index, n, depth), nullptr, f->name);
    case FKind::Forall:
      return fclone(f, fsubst_rec(f->left, index, n, depth + 1), nullptr, f->name);
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      return fclone(f, fsubst_rec(f->left, index, n, depth),
                    fsubst_rec(f->right, index, n, depth), f->name);
    case FKind::AmbF:
    case FKind::At:
      return fclone(f, fsubst_rec(f->left, index, n, depth), nullptr, fix(f->name));
  }
  return f;
}

FProc substitute(const FProc& f, int index, const std::string& n) {
  return fsubst_rec(f, index, n, 0);
}

static FProc ntv_rec(const FProc& f, const std::string& n, int index, int depth) {
  auto fix = [&](const NameRef& r) -> NameRef {
    if (!r.var && r.text == n) return NameRef::variable(index + depth);
    return r;
  };
  switch (f->kind) {
    case FKind::True:
    case FKind::Void:
      return f;
    case FKind::Not:
    case FKind::Sometime:
      return fclone(f, ntv_rec(f->left, n, index, depth), nullptr, f->name);
    case FKind::Forall:
      return fclone(f, ntv_rec(f->left, n, index, depth + 1), nullptr, f->name);
    case FKind::Or:
    case FKind::ParF:
    case FKind::Guarantee:
      return fclone(f, ntv_rec(f->left, n, index, depth),
                    ntv_rec(f->right, n, index, depth), f->name);
    case FKind::AmbF:
    case FKind::At:
      return fclone(f, ntv_rec(f->left, n, index, depth), nullptr, fix(f->name));
  }
  return f;
}

FProc name_to_var(const FProc& f, const std::string& n, int index) {
  return ntv_rec(f, n, index, 0);
}

// ---------------------------------------------------------------------------
// Formula printing with sugar re-folding.
//
// Precedence, loosest first: -> ; \/ and /\ ; |> and |>> ; | ; @ ; unary.

namespace {

enum { PREC_IMP = 0, PREC_ORAND = 1, PREC_GUAR = 2, PREC_PAR = 3, PREC_AT = 4, PREC_UNARY = 5 };

struct FPrintEnv {
  const std::set<std::string>* avoid;
  std::vector<std::string> binders;

  std::string pick(const std::string& hint) const {
    std::string base = hint.empty() || hint[0] == '#' ? "x" : hint;
    std::string cand = base;
    int k = 1;
    auto used = [&](const std::string& s) {
      if (avoid->count(s)) return true;
      return std::find(binders.begin(), binders.end(), s) != binders.end();
    };
    while (used(cand)) cand = base + std::to_string(k++);
    return cand;
  }

  std::string ref(const NameRef& r) const {
    if (!r.var) return r.text;
    int pos = static_cast<int>(binders.size()) - 1 - r.index;
    if (pos < 0) return "?" + std::to_string(r.index);
    return binders[static_cast<size_t>(pos)];
  }
};

void fprint_rec(const FProc& f, FPrintEnv& env, int minPrec, std::string& out);

void paren(bool need, FPrintEnv& env, const FProc& f, int childPrec, std::string& out) {
  if (need) out += '(';
  fprint_rec(f, env, childPrec, out);
  if (need) out += ')';
}

void fprint_rec(const FProc& f, FPrintEnv& env, int minPrec, std::string& out) {
  switch (f->sugar) {
    case FSugar::False:
      out += 'F';
      return;
    case FSugar::And: {
      // Not(Or(Not a, Not b))
      FProc a = f->left->left->left, b = f->left->right->left;
      bool need = minPrec > PREC_ORAND;
      if (need) out += '(';
      fprint_rec(a, env, PREC_ORAND, out);
      out += " /\\ ";
      fprint_rec(b, env, PREC_GUAR, out);
      if (need) out += ')';
      return;
    }
    case FSugar::Implies: {
      FProc a = f->left->left, b = f->right;
      bool need = minPrec > PREC_IMP;
      if (need) out += '(';
      fprint_rec(a, env, PREC_ORAND, out);
      out += " -> ";
      fprint_rec(b, env, PREC_IMP, out);
      if (need) out += ')';
      return;
    }
    case FSugar::Exists: {
      FProc body = f->left->left->left;
      std::string b = env.pick(f->left->hint);
      bool need = minPrec > PREC_IMP;
      if (need) out += '(';
      out += "exists " + b + ". ";
      env.binders.push_back(b);
      fprint_rec(body, env, PREC_IMP, out);
      env.binders.pop_back();
      if (need) out += ')';
      return;
    }
    case FSugar::Box: {
      FProc body = f->left->left->left;
      out += "[]";
      paren(true, env, body, PREC_IMP, out);
      return;
    }
    case FSugar::CoGuarantee: {
      FProc a = f->left->left, b = f->left->right->left;
      bool need = minPrec > PREC_GUAR;
      if (need) out += '(';
      fprint_rec(a, env, PREC_PAR, out);
      out += " |>> ";
      fprint_rec(b, env, PREC_GUAR, out);
      if (need) out += ')';
      return;
    }
    case FSugar::None:
      break;
  }
  switch (f->kind) {
    case FKind::True:
      out += 'T';
      return;
    case FKind::Void:
      out += '0';
      return;
    case FKind::Not:
      out += '~';
      paren(true, env, f->left, PREC_IMP, out);
      return;
    case FKind::Or: {
      bool need = minPrec > PREC_ORAND;
      if (need) out += '(';
      fprint_rec(f->left, env, PREC_ORAND, out);
      out += " \\/ ";
      fprint_rec(f->right, env, PREC_GUAR, out);
      if (need) out += ')';
      return;
    }
    case FKind::Forall: {
      std::string b = env.pick(f->hint);
      bool need = minPrec > PREC_IMP;
      if (need) out += '(';
      out += "forall " + b + ". ";
      env.binders.push_back(b);
      fprint_rec(f->left, env, PREC_IMP, out);
      env.binders.pop_back();
      if (need) out += ')';
      return;
    }
    case FKind::Sometime:
      out += "<>";
      paren(true, env, f->left, PREC_IMP, out);
      return;
    case FKind::AmbF:
      out += env.ref(f->name);
      out += '[';
      fprint_rec(f->left, env, PREC_IMP, out);
      out += ']';
      return;
    case FKind::ParF: {
      bool need = minPrec > PREC_PAR;
      if (need) out += '(';
      fprint_rec(f->left, env, PREC_PAR, out);
      out += " | ";
      fprint_rec(f->right, env, PREC_AT, out);
      if (need) out += ')';
      return;
    }
    case FKind::At: {
      bool need = minPrec > PREC_AT;
      if (need) out += '(';
      fprint_rec(f->left, env, PREC_AT + 1, out);
      out += " @ ";
      out += env.ref(f->name);
      if (need) out += ')';
      return;
    }
    case FKind::Guarantee: {
      bool need = minPrec > PREC_GUAR;
      if (need) out += '(';
      fprint_rec(f->left, env, PREC_PAR, out);
      out += " |> ";
      fprint_rec(f->right, env, PREC_GUAR, out);
      if (need) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FProc& f) {
  auto fn = free_names(f);
  FPrintEnv env{&fn, {}};
  std::string out;
  fprint_rec(f, env, PREC_IMP, out);
  return out;
}

// ---------------------------------------------------------------------------
// Formula parsing

namespace {

struct FormParser {
  std::vector<Token> toks;
  size_t pos = 0;
  std::vector<std::string> scope;

  const Token& cur() const { return toks[pos]; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, cur().line, cur().col);
  }
  Token expect(Tok t, const std::string& what) {
    if (cur().t != t) fail("expected " + what);
    return toks[pos++];
  }

  NameRef resolve(const std::string& id) {
    for (int k = static_cast<int>(scope.size()) - 1; k >= 0; --k)
      if (scope[static_cast<size_t>(k)] == id)
        return NameRef::variable(static_cast<int>(scope.size()) - 1 - k, id);
    return NameRef::name(id);
  }

  FProc parseImp() {
    FProc a = parseOrAnd();
    if (cur().t == Tok::Arrow) {
      ++pos;
      return f_implies(a, parseImp());
    }
    return a;
  }

  FProc parseOrAnd() {
    FProc a = parseGuar();
    for (;;) {
      if (cur().t == Tok::OrOp) {
        ++pos;
        a = f_or(a, parseGuar());
      } else if (cur().t == Tok::AndOp) {
        ++pos;
        a = f_and(a, parseGuar());
      } else {
        return a;
      }
    }
  }

  FProc parseGuar() {
    FProc a = parsePar();
    if (cur().t == Tok::Guar) {
      ++pos;
      return f_guarantee(a, parseGuar());
    }
    if (cur().t == Tok::CoGuar) {
      ++pos;
      return f_coguarantee(a, parseGuar());
    }
    return a;
  }

  FProc parsePar() {
    FProc a = parseAt();
    while (cur().t == Tok::Pipe) {
      ++pos;
      a = f_par(a, parseAt());
    }
    return a;
  }

  FProc parseAt() {
    FProc a = parseUnary();
    while (cur().t == Tok::At) {
      ++pos;
      Token id = expect(Tok::Id, "a name after '@'");
      a = f_at(a, resolve(id.text));
    }
    return a;
  }

  FProc parseUnary() {
    switch (cur().t) {
      case Tok::Tilde:
        ++pos;
        return f_not(parseUnary());
      case Tok::Diamond:
        ++pos;
        return f_sometime(parseUnary());
      case Tok::BoxOp:
        ++pos;
        return f_box(parseUnary());
      case Tok::KwForall:
      case Tok::KwExists: {
        bool uni = cur().t == Tok::KwForall;
        ++pos;
        Token id = expect(Tok::Id, "a variable after quantifier");
        expect(Tok::Dot, "'.' after quantified variable");
        scope.push_back(id.text);
        FProc body = parseImp();
        scope.pop_back();
        return uni ? f_forall(id.text, body) : f_exists(id.text, body);
      }
      case Tok::TrueT:
        ++pos;
        return f_true();
      case Tok::FalseT:
        ++pos;
        return f_false();
      case Tok::Zero:
        ++pos;
        return f_void();
      case Tok::Id: {
        Token id = toks[pos++];
        expect(Tok::LBrack, "'[' after ambient-formula name");
        FProc body = parseImp();
        expect(Tok::RBrack, "']' closing the ambient formula");
        return f_amb(resolve(id.text), body);
      }
      case Tok::LParen: {
        ++pos;
        FProc a = parseImp();
        expect(Tok::RParen, "')'");
        return a;
      }
      default:
        fail("expected a formula");
    }
  }
};

}  // namespace

FProc parse_formula(const std::string& text) {
  Lexer lx(text, true);
  lx.run();
  FormParser fp{std::move(lx.toks)};
  FProc f = fp.parseImp();
  if (fp.cur().t != Tok::End)
    throw ParseError("trailing input after formula", fp.cur().line, fp.cur().col);
  return f;
}

std::string fresh_name(const std::set<std::string>& avoid, const std::string& base) {
  if (!avoid.count(base) && is_reserved_name(base)) return base;
  for (int k = 0;; ++k) {
    std::string cand = "#" + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

bool is_reserved_name(const std::string& n) { return !n.empty() && n[0] == '#'; }

}  // namespace ambient
