#ifndef AMBIENT_SYNTAX_HPP
#define AMBIENT_SYNTAX_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace ambient {

// A name position: either a free name (text) or a bound variable
// (de Bruijn index, innermost binder = 0). For variables `text` is only a
// printing hint and is ignored by comparison.
struct NameRef {
  bool var = false;
  int index = 0;
  std::string text;

  static NameRef name(std::string t) { return NameRef{false, 0, std::move(t)}; }
  static NameRef variable(int idx, std::string hint = "") {
    return NameRef{true, idx, std::move(hint)};
  }
};

int cmp(const NameRef& a, const NameRef& b);
inline bool operator==(const NameRef& a, const NameRef& b) { return cmp(a, b) == 0; }

enum class CapKind { In, Out, Open };

struct Capability {
  CapKind kind = CapKind::In;
  NameRef target;
};

int cmp(const Capability& a, const Capability& b);
inline bool operator==(const Capability& a, const Capability& b) { return cmp(a, b) == 0; }

enum class PKind { Nil, Par, Repl, Prefix, Amb, Msg, Abs };

class Process;
using PProc = std::shared_ptr<const Process>;

// Immutable process tree. Binders are positional; `hint` on Abs is a surface
// name used only when printing.
class Process {
 public:
  PKind kind = PKind::Nil;
  Capability cap;    // Prefix
  NameRef name;      // Amb head, Msg payload
  std::string hint;  // Abs binder print hint
  PProc left, right; // Par children; body stored in `left` for Repl/Prefix/Amb/Abs
};

PProc nil();
PProc par(PProc a, PProc b);
PProc repl(PProc body);
PProc prefix(Capability c, PProc body);
PProc amb(NameRef n, PProc body);
PProc msg(NameRef payload);
PProc abs(std::string hint, PProc body);

int cmp(const PProc& a, const PProc& b);
inline bool equal(const PProc& a, const PProc& b) { return cmp(a, b) == 0; }

// AST node count, counting Nil leaves.
int node_count(const PProc& p);

// Compact canonical-key serialization (hints ignored).
std::string serialize(const PProc& p);

bool closed(const PProc& p);

std::set<std::string> free_names(const PProc& p);

// Replaces free variable `index` by name `n` and shifts deeper free variables
// down by one (used when opening a binder).
PProc substitute(const PProc& p, int index, const std::string& n);

// Replaces free variable `index` by (possibly another) variable/name reference
// without shifting; used internally by beta reduction.
PProc substitute_ref(const PProc& p, int index, const NameRef& r);

// Opens an abstraction body with name n (substitute index 0, shift down).
PProc open_abs(const PProc& absBody, const std::string& n);

std::string print_process(const PProc& p);

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

PProc parse_process(const std::string& text);

// ---------------------------------------------------------------------------
// Formulas

enum class FKind { True, Not, Or, Forall, Sometime, Void, AmbF, ParF, At, Guarantee };

// Derived connectives are stored expanded; the tag remembers how to re-fold
// when printing. Comparison ignores it.
enum class FSugar { None, False, And, Implies, Exists, Box, CoGuarantee };

class Formula;
using FProc = std::shared_ptr<const Formula>;

class Formula {
 public:
  FKind kind = FKind::True;
  NameRef name;      // AmbF head, At location
  std::string hint;  // Forall binder print hint
  FProc left, right; // body in `left` for Not/Forall/Sometime/AmbF
  FSugar sugar = FSugar::None;
};

FProc f_true();
FProc f_false();
FProc f_not(FProc a);
FProc f_or(FProc a, FProc b);
FProc f_and(FProc a, FProc b);
FProc f_implies(FProc a, FProc b);
FProc f_forall(std::string hint, FProc body);
FProc f_exists(std::string hint, FProc body);
FProc f_sometime(FProc a);
FProc f_box(FProc a);
FProc f_void();
FProc f_amb(NameRef n, FProc a);
FProc f_par(FProc a, FProc b);
FProc f_at(FProc a, NameRef n);
FProc f_guarantee(FProc a, FProc b);
FProc f_coguarantee(FProc a, FProc b);

int cmp(const FProc& a, const FProc& b);
inline bool equal(const FProc& a, const FProc& b) { return cmp(a, b) == 0; }

int node_count(const FProc& f);
std::string serialize(const FProc& f);
bool closed(const FProc& f);
std::set<std::string> free_names(const FProc& f);

// Replaces free formula variable `index` by name n, shifting deeper free
// variables down (opening a quantifier).
FProc substitute(const FProc& f, int index, const std::string& n);

// Replaces every occurrence of free name `n` by variable `index` (used when
// closing a formula under a new quantifier).
FProc name_to_var(const FProc& f, const std::string& n, int index);

std::string print_formula(const FProc& f);

FProc parse_formula(const std::string& text);

// Fresh names live in the reserved "#" namespace, rejected by the parsers.
std::string fresh_name(const std::set<std::string>& avoid, const std::string& base = "#0");
bool is_reserved_name(const std::string& n);

}  // namespace ambient

#endif
