#ifndef AMBIENT_LOGIC_HPP
#define AMBIENT_LOGIC_HPP

#include "ambient/semantics.hpp"

namespace ambient {

enum class VValue { True, False, Unknown };
enum class VReason { None, Reach, Spawn, Context, Stutter };

struct Verdict {
  VValue value = VValue::Unknown;
  VReason reason = VReason::None;

  static Verdict yes() { return {VValue::True, VReason::None}; }
  static Verdict no() { return {VValue::False, VReason::None}; }
  static Verdict unknown(VReason r) { return {VValue::Unknown, r}; }
  static Verdict of(bool b) { return b ? yes() : no(); }

  bool is_true() const { return value == VValue::True; }
  bool is_false() const { return value == VValue::False; }
  bool definite() const { return value != VValue::Unknown; }
};

// Kleene connectives; the first Unknown reason encountered wins.
Verdict vnot(Verdict a);
Verdict vor(Verdict a, Verdict b);
Verdict vand(Verdict a, Verdict b);

// Supplies candidate contexts R for the adjuncts: refuters for A |> B
// (R |= A with P|R refuting B) double as witnesses for the dual. Returned
// candidates are always re-verified by the checker, never trusted.
class WitnessProvider {
 public:
  virtual ~WitnessProvider() = default;
  virtual std::vector<PProc> candidates(const FProc& antecedent, const PProc& p) = 0;
};

// Budgeted three-valued satisfaction per the satisfaction clauses. With
// use_lemmas, closed sub-formulas matching the library's derived-formula
// expansions are evaluated through their proven characterizations (needed for
// definite verdicts on replicated processes); without it, only the primitive
// clause-by-clause evaluation runs.
Verdict check(const PProc& p, const FProc& a, const Budget& b,
              WitnessProvider* w = nullptr, bool use_lemmas = true);

struct ModelsResult {
  std::vector<PProc> models;
  bool exhaustive = true;  // false if any Unknown verdict was encountered
};

// Canonical processes of size <= max_size satisfying a. The alphabet defaults
// to free_names(a) plus b.extra_fresh fresh names.
ModelsResult models(const FProc& a, int max_size, const Budget& b,
                    std::vector<std::string> alphabet = {});

}  // namespace ambient

#endif
