#ifndef AMBIENT_ENUMERATE_HPP
#define AMBIENT_ENUMERATE_HPP

#include <vector>

#include "ambient/congruence.hpp"

namespace ambient {

// One representative per congruence class of closed processes with node count
// <= max_size, in a deterministic order (size-ascending; first raw term of
// each class wins). Abstraction bodies carry at most one variable in scope.
std::vector<PProc> enumerate_processes(const std::vector<std::string>& alphabet,
                                       int max_size, bool allow_repl, bool allow_io);

// All terms reachable from p by <= depth bidirectional applications of the
// seven congruence axioms at any position, as raw ASTs. Intermediate terms
// larger than size_cap are pruned (0 picks node_count(p) + 8); the cap is
// part of the oracle contract, not an approximation knob for callers that
// know their chains fit.
std::vector<PProc> axiom_closure(const PProc& p, int depth, int size_cap = 0);

// Single bidirectional axiom steps at any position (raw ASTs, undeduped).
std::vector<PProc> axiom_rewrites(const PProc& p);

// Closed formulas over the primitive connectives with node count <= max_size,
// deduped structurally; quantifier bodies carry at most one variable.
std::vector<FProc> enumerate_formulas(const std::vector<std::string>& alphabet,
                                      int max_size);

}  // namespace ambient

#endif
