#ifndef AMBIENT_SEMANTICS_HPP
#define AMBIENT_SEMANTICS_HPP

#include "ambient/congruence.hpp"

namespace ambient {

struct Budget {
  int reach_depth = 12;
  int spawn_bound = 2;
  int context_size = 8;
  int extra_fresh = 1;
};

struct Label {
  enum Kind { Cap, Output, Input } kind = Cap;
  Capability cap;    // Kind::Cap (target must be a name)
  std::string name;  // Output payload / Input name

  static Label capability(Capability c) { return Label{Cap, std::move(c), ""}; }
  static Label output(std::string n) { return Label{Output, {}, std::move(n)}; }
  static Label input(std::string n) { return Label{Input, {}, std::move(n)}; }
};

struct ReachSet {
  std::vector<CanonicalForm> states;
  bool complete = true;
  int depth_used = 0;

  std::vector<PProc> processes() const {
    std::vector<PProc> out;
    for (const auto& cf : states) out.push_back(to_process(cf));
    return out;
  }
};

// All one-step reducts up to congruence (canonical representatives). Each
// replicated component contributes one unfolded copy to the redex search.
std::vector<PProc> reducts(const PProc& p);

ReachSet reachable(const PProc& p, int max_depth);

// Def-style labelled transitions; results up to congruence.
std::vector<PProc> labelled(const PProc& p, const Label& l);

// Weak transition: P ==> . --l--> . ==> Q. `complete` (optional out) is
// cleared when any internal closure was truncated.
std::vector<PProc> weak_labelled(const PProc& p, const Label& l, int depth,
                                 bool* complete = nullptr);

// The convergence relation under a capability: identity plus rounds of
// (==dual==>)(==cap'==>) stuttering; for `open n` it is plain reachability.
ReachSet stutter_reachable(const PProc& p, const Capability& cap, const Budget& b);

}  // namespace ambient

#endif
