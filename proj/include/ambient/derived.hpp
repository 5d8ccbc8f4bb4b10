#ifndef AMBIENT_DERIVED_HPP
#define AMBIENT_DERIVED_HPP

#include "ambient/logic.hpp"

namespace ambient {

enum class Tag {
  OneComp, TwoComp, ForallComp, OmegaComp, NameEq, OneAmb, OneAmbZero,
  MayCap, AnyOpen, AnyIn, AnyOut, MustCap, OneComm, TwoComm, TestComm,
  MsgIs, OneMess, MayInput, MustInput, OneInput, Fin, Flat, TopOcc, Occ,
  ReplIn, ReplOut, ReplOpen, ReplAmb, ReplMsg, ReplInput,
};

struct NamedFormula {
  Tag tag = Tag::OneComp;
  std::string n, m;             // name arguments (n primary, m for NameEq/TestComm)
  CapKind cap = CapKind::In;    // MayCap/MustCap
  FProc arg;                    // formula argument where the tag takes one

  static NamedFormula plain(Tag t) { return {t, "", "", CapKind::In, nullptr}; }
  static NamedFormula with_name(Tag t, std::string n_) {
    return {t, std::move(n_), "", CapKind::In, nullptr};
  }
  static NamedFormula with_names(Tag t, std::string n_, std::string m_) {
    return {t, std::move(n_), std::move(m_), CapKind::In, nullptr};
  }
  static NamedFormula with_arg(Tag t, FProc a) {
    return {t, "", "", CapKind::In, std::move(a)};
  }
  static NamedFormula with_name_arg(Tag t, std::string n_, FProc a) {
    return {t, std::move(n_), "", CapKind::In, std::move(a)};
  }
  static NamedFormula capability(Tag t, CapKind k, std::string n_, FProc a) {
    return {t, std::move(n_), "", k, std::move(a)};
  }
};

const char* tag_name(Tag t);
bool tag_from_name(const std::string& s, Tag& out);

// The literal expansion of the derived formula.
FProc build(const NamedFormula& nf);

// Inverse of build on exact expansions (hints and sugar ignored).
std::optional<NamedFormula> recognize(const FProc& a);

// Direct lemma-level predicate for the tag, computed without evaluating the
// expansion. The `eval` callback scores argument formulas (lets the checker
// pass its own recursion back in); oracle() uses a plain recursive check.
Verdict oracle(const NamedFormula& nf, const PProc& p, const Budget& b);

// recognize + characterization-based evaluation; nullopt when a is not a
// known expansion. Used by check() as a fast path.
std::optional<Verdict> lemma_eval(const PProc& p, const FProc& a, const Budget& b,
                                  WitnessProvider* w);

struct FinWitness {
  std::string n;
  PProc Q, R;
};

// Constructs (n, Q, R) with n[P|Q] | R ==> 0, verified by reachability.
FinWitness finiteness_witness(const PProc& p);

struct OccWitness {
  PProc Q, R;
};

// Constructs flat, n-free Q, R with m[P|Q] | R ==> m[S], depth of n in S
// zero; verified by reachability. m must be fresh for P.
OccWitness occurrence_witness(const PProc& p, const std::string& n,
                              const std::string& m);

struct SelectivityReport {
  bool sd_constant = true;
  bool dd_constant = true;
  int model_count = 0;
  std::vector<PProc> sd_counterexamples;  // models with deviating sd
  std::vector<PProc> dd_counterexamples;
};

SelectivityReport selectivity_probe(const FProc& a, int corpus_size, const Budget& b);

// Witness provider backed by the two constructive lemma proofs: supplies
// refuting/witnessing contexts for the adjuncts inside Fin and Occ patterns.
class ConstructiveWitnesses : public WitnessProvider {
 public:
  std::vector<PProc> candidates(const FProc& antecedent, const PProc& p) override;
};

}  // namespace ambient

#endif
