// The relation calculus on singular expressions: the star-quadratic
// relation, the two associativity relations (up-up, down-down), and the
// switchback relation driven by rotation sequences. Together these present
// the singular Coxeter monoid, and the redex machinery here is what the
// rewriting normalizer and the rex graph are built on.

#ifndef SCOX_RELATIONS_H
#define SCOX_RELATIONS_H

#include <stdexcept>
#include <string>

#include "scox/expression.h"

namespace scox {

// Raised when s = w_{Js} t w_{Js}: the coset [J+s-t] then has a unique
// reduced expression and no switchback relation exists.
struct NoRotationError : std::domain_error {
  using std::domain_error::domain_error;
};

// The rotation sequence of (J, s, t): u_0 = s, u_{-1} = w_{Js} t w_{Js},
// and u_{i+1} = w_{I_i} u_{i-1} w_{I_i} with I_i = Js minus u_i. The
// sequence is periodic in both directions; one minimal period is stored,
// starting at u_{-1}. delta is the largest k for which the alternating
// expression [I_0, L_1, I_1, ..., L_k, I_k] stays reduced; then u_delta = t.
struct RotationSequence {
  GenSet J;
  int s = -1;
  int t = -1;
  int delta = 0;
  std::vector<int> u; // one minimal period: u_{-1}, u_0, u_1, ...

  int period() const { return static_cast<int>(u.size()); }
  int at(int i) const { // u_i for any integer i
    int p = period();
    return u[((i + 1) % p + p) % p];
  }
};

enum class RelationKind { StarQuadratic, UpUp, DownDown, Switchback };

// "quadratic", "up-up", "down-down", "switchback" — the names used in trace
// output and graph labels.
const char* relation_kind_name(RelationKind kind);

// One applicable rewrite: replace the subword lhs (sitting at step index
// `position` of a host expression) by rhs. `forward` marks the normalizing
// orientation: contraction for the quadratic relation, long-to-short for
// switchback; the self-inverse associativity moves are always forward.
struct RelationInstance {
  RelationKind kind = RelationKind::UpUp;
  int position = 0;
  bool forward = true;
  Expression lhs;
  Expression rhs;

  friend bool operator==(const RelationInstance& a, const RelationInstance& b) {
    return a.kind == b.kind && a.position == b.position && a.forward == b.forward &&
           a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

// Throws NoRotationError when s = w_{Js} t w_{Js}; std::invalid_argument on
// malformed input (s in J, t outside Js, Js not finitary). Results are
// cached per (matrix, J, s, t).
RotationSequence rotation_sequence(const System& sys, GenSet J, int s, int t);

// The switchback relation for (J, s, t): lhs = [J+s-t], rhs the alternating
// expression [J-u_1+s-u_2+u_1-...-t+u_{delta-1}]. Both sides are reduced
// expressions for the (J, Js\t)-coset containing w_{Js} (checked).
RelationInstance switchback(const System& sys, GenSet J, int s, int t);

// Every way a relation applies to a contiguous subword of e, including
// quadratic expansions at each position and switchback in both directions.
// Deterministically ordered by (position, kind, orientation, letters).
std::vector<RelationInstance> enumerate_redexes(const System& sys, const Expression& e);

// Replace the matched subword. Throws std::invalid_argument when r does not
// match e at its position (a stale redex). The evaluation is checked to be
// unchanged.
Expression apply(const System& sys, const Expression& e, const RelationInstance& r);

// One row of the switchback table: the relation for J = S\{s_a}, s = s_a,
// t = s_b in an irreducible type, recorded as the intermediate letter
// sequence c = (u_1, ..., u_{delta-1}). All numbers are 1-based.
struct SwitchbackRow {
  int a = 0;
  int b = 0;
  std::vector<int> c;

  friend bool operator==(const SwitchbackRow& x, const SwitchbackRow& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// All rows (a,b) of the named irreducible finite type, ordered pairs in
// lexicographic order, skipping the pairs with s_a = w_0 s_b w_0 (which
// have no switchback). Computed from scratch, never tabulated.
std::vector<SwitchbackRow> section6_table(const std::string& type_name);

} // namespace scox

#endif
