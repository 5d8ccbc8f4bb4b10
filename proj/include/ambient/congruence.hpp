#ifndef AMBIENT_CONGRUENCE_HPP
#define AMBIENT_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "ambient/syntax.hpp"

namespace ambient {

struct CanonicalForm;
using PCanon = std::shared_ptr<const CanonicalForm>;

// A normalized non-Nil, non-Par, non-Repl component. Msg has a null body.
struct CanonicalSingle {
  PKind kind = PKind::Msg;  // Prefix, Amb, Msg or Abs
  Capability cap;           // Prefix
  NameRef name;             // Amb head, Msg payload
  std::string hint;         // Abs binder hint (ignored by cmp)
  PCanon body;
};

// Parallel composition as a sorted multiset `plain` plus a sorted set `repl`
// of replicated components, with plain copies of repl elements absorbed.
struct CanonicalForm {
  std::vector<CanonicalSingle> plain;
  std::vector<CanonicalSingle> repl;
};

int cmp(const CanonicalSingle& a, const CanonicalSingle& b);
int cmp(const CanonicalForm& a, const CanonicalForm& b);
inline bool equal(const CanonicalForm& a, const CanonicalForm& b) { return cmp(a, b) == 0; }

// Decision procedure for structural congruence. Defined on open terms too
// (variables compare positionally); top-level callers require closed input.
CanonicalForm canonicalize(const PProc& p);

PProc to_process(const CanonicalForm& cf);
PProc to_process(const CanonicalSingle& s);
CanonicalSingle canonical_single(const PProc& p);  // p must not be Nil/Par/Repl

// Rebuild a CanonicalForm from parts, restoring sortedness/absorption.
CanonicalForm make_canonical(std::vector<CanonicalSingle> plain,
                             std::vector<CanonicalSingle> repl);

// Serialization of the canonical representative; equal iff congruent.
std::string canonical_key(const PProc& p);

bool congruent(const PProc& p, const PProc& q);

PProc eta_normalize(const PProc& p);
PProc beta_normalize(const PProc& p);

int sd(const PProc& p);
int dd(const PProc& p);

// nullopt encodes infinity.
using Depth = std::optional<int>;
Depth depth_n(const PProc& p, const std::string& n);

bool is_finite(const PProc& p);
bool is_single(const PProc& p);

}  // namespace ambient

#endif
