// Singular expressions: sequences of finitary subsets changing by one
// generator per step, written [J +s -t ...]. An expression evaluates to a
// double coset; the reduced ones are the singular analogue of reduced
// words, and this header carries all four reducedness criteria plus the
// constructive ways of producing reduced expressions (some_rex, the high
// and low roads, extensions, embeddings).

#ifndef SCOX_EXPRESSION_H
#define SCOX_EXPRESSION_H

#include "scox/coset.h"

namespace scox {

struct Step {
  bool up; // +t adds the generator, -t removes it
  int gen;

  friend bool operator==(const Step& a, const Step& b) {
    return a.up == b.up && a.gen == b.gen;
  }
  friend bool operator<(const Step& a, const Step& b) {
    return a.up != b.up ? a.up < b.up : a.gen < b.gen;
  }
};

struct Expression {
  GenSet start; // I_0
  std::vector<Step> steps;

  int width() const { return static_cast<int>(steps.size()); }

  GenSet end() const {
    GenSet I = start;
    for (const Step& st : steps) I = st.up ? I.plus(st.gen) : I.minus(st.gen);
    return I;
  }

  // The subset chain I_0, ..., I_d.
  std::vector<GenSet> subsets() const {
    std::vector<GenSet> out{start};
    for (const Step& st : steps)
      out.push_back(st.up ? out.back().plus(st.gen) : out.back().minus(st.gen));
    return out;
  }

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.start == b.start && a.steps == b.steps;
  }
  friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }
  friend bool operator<(const Expression& a, const Expression& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.steps < b.steps;
  }
};

// Multistep form: an alternating chain I_0 <= K_1 >= I_1 <= ... <= K_m >= I_m,
// stored flat; entries at odd positions are the K's.
struct MultistepExpression {
  std::vector<GenSet> chain;
};

struct ForwardPath {
  std::vector<Coset> cosets;      // p_0..p_d, p_i an (I_0, I_i)-coset
  std::vector<GenSet> redundancy; // K_0..K_d, left redundancies along the path
};

// The data of the lengths-add test: z_i = w_{I_{i-1} n I_i}^{-1} w_{I_i},
// y_i the mirror factors, a0 the dotted product w_{I_0} z_1 ... z_d.
struct ReducednessCertificate {
  std::vector<Element> y;
  std::vector<Element> z;
  Element a0;
  bool lengths_add = false;
};

struct ExprLengths {
  int plus = 0;  // sum of up-step increments l(I_i) - l(I_{i-1})
  int minus = 0; // sum of down-step increments
  int total = 0;
};

// Structural validity: each +t has t outside the current subset, each -t
// inside, and every subset along the way is finitary. Throws
// std::invalid_argument otherwise.
void validate(const System& sys, const Expression& e);

// Build an expression from its subset chain (the paper-style bracket list);
// consecutive subsets must differ by exactly one generator.
Expression from_subsets(const std::vector<GenSet>& chain);

Coset evaluate(const System& sys, const Expression& e);
ForwardPath forward_path(const System& sys, const Expression& e);

ReducednessCertificate reducedness_certificate(const System& sys, const Expression& e);
bool is_reduced(const System& sys, const Expression& e);

// Williamson's step-local criterion over the forward path: down-steps are
// always reduced, an up-step is reduced when it changes neither the minimum
// nor the redundancy.
bool reduced_at(const System& sys, const Expression& e, int i);
bool is_reduced_williamson(const System& sys, const Expression& e);

ExprLengths expr_lengths(const System& sys, const Expression& e);

Expression reverse(const Expression& e);

// Concatenation (a must end where b starts; std::invalid_argument
// otherwise), and the junction criterion: for reduced a, b the result is
// reduced iff lengths add in amax . w_J^{-1} . bmax across the junction J.
Expression concat(const Expression& a, const Expression& b);
bool concat_is_reduced(const System& sys, const Expression& a, const Expression& b);

// Multistep conversions. Expanding a leg uses ascending generator order for
// additions and descending for removals; any other choice differs by up-up /
// down-down moves. Validation throws std::invalid_argument.
void validate_multistep(const System& sys, const MultistepExpression& m);
Expression multistep_to_singlestep(const System& sys, const MultistepExpression& m);
MultistepExpression singlestep_to_multistep(const System& sys, const Expression& e);

// The alternating-chain criterion: lengths add in the dotted product
// w_{K_1} w_{I_1}^{-1} w_{K_2} ... w_{K_m}.
bool is_reduced_multistep(const System& sys, const MultistepExpression& m);

// A reduced expression for p, built backward: repeatedly peel a valid last
// step, trying "-t" candidates before "+t", lowest generator first.
Expression some_rex(const System& sys, const Coset& p);

// The two canonical reduced expressions of §"roads": climb to the full
// descent sets of max and come back down, or drop to the core and return.
Expression high_road(const System& sys, const Coset& p);
Expression low_road(const System& sys, const Coset& p);

// Extend a reduced expression so that the evaluated coset contains the
// longest element of the whole (finite) group, ending at the subset Kprime;
// possible exactly when Kprime is contained in the right descents of
// w_J max^{-1} w_S (J the expression's endpoint) — std::domain_error if not.
Expression extend_to_longest(const System& sys, const Expression& e, GenSet Kprime);

// Prefix an enumeration of the start (iota) or append a tear-down of the
// end (kappa), turning a J-expression into an 0-expression. Empty order
// means ascending for iota and descending for kappa.
Expression iota_embed(const Expression& e, const std::vector<int>& order = {});
Expression kappa_embed(const Expression& e, const std::vector<int>& order = {});

} // namespace scox

#endif
