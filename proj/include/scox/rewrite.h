#pragma once

// The rewriting layer: normalization of expressions to reduced form, explicit
// relation paths between reduced expressions of the same coset, enumeration
// of all reduced expressions, and the graph they form under single relation
// applications.  Everything here produces checkable certificates: a trace or
// path replays step by step through apply(), independent of how it was found.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scox/coset.h"
#include "scox/coxeter.h"
#include "scox/expression.h"
#include "scox/relations.h"

namespace scox {

// A run of the normalizer: `steps` applied in order carry `start` to
// `result`, which is reduced and evaluates to the same coset.
struct RewriteTrace {
  Expression start;
  std::vector<RelationInstance> steps;
  Expression result;
};

// Re-applies the trace from its start and returns the final expression,
// throwing std::logic_error if any step fails to apply or the outcome
// disagrees with trace.result.
Expression replay(const System& sys, const RewriteTrace& trace);

// Rewrites e to a reduced expression of the same coset.  Braid moves are
// used to surface cancelling pairs, which the quadratic relation then
// removes; every quadratic step shortens the expression.
RewriteTrace normalize(const System& sys, const Expression& e);

// A sequence of relation instances carrying one reduced expression of a
// coset to another.  Both arguments must be reduced and evaluate to the same
// coset; the result applied in order transforms `from` into `to`.
std::vector<RelationInstance> matsumoto_path(const System& sys, const Expression& from,
                                             const Expression& to);

// Thrown when an enumeration would exceed its vertex budget.
struct RexBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The budget used when a caller passes max_vertices = 0: the value of
// SCOX_MAX_VERTICES when set to a positive integer, otherwise one million.
size_t default_vertex_cap();

// Number of reduced expressions of p.  Saturates at UINT64_MAX instead of
// overflowing.
uint64_t rex_count(const System& sys, const Coset& p);

// All reduced expressions of p, sorted.  Throws RexBoundError if more than
// max_vertices expressions would be materialized (0 means the default cap).
std::vector<Expression> rex_set(const System& sys, const Coset& p, size_t max_vertices = 0);

struct RexEdge {
  int from = 0;  // indices into RexGraph::vertices, from < to
  int to = 0;
  RelationInstance via;  // an instance carrying vertices[from] to vertices[to]
  int multiplicity = 1;  // distinct instances with that effect
};

// The reduced expressions of a coset, with an edge wherever a single braid
// relation (up-up, down-down, switchback) carries one to another.
struct RexGraph {
  Coset p;
  std::vector<Expression> vertices;
  std::vector<RexEdge> edges;
};

RexGraph rex_graph(const System& sys, const Coset& p, size_t max_vertices = 0);
bool is_connected(const RexGraph& g);
std::string rex_graph_dot(const System& sys, const RexGraph& g);

// Connectivity audit over every double coset of the system.  Small cosets
// (at most max_vertices reduced expressions) are checked exhaustively by
// materializing the graph; larger ones constructively, by certifying bridges
// between the clusters of expressions sharing a final step and leaning on
// the already-verified connectivity of the predecessor cosets.
struct MatsumotoReport {
  struct Entry {
    Coset p;
    uint64_t rexes = 0;
    bool exhaustive = false;
    bool connected = false;
  };
  std::vector<Entry> entries;
  uint64_t cosets = 0;
  uint64_t exhaustive = 0;
  uint64_t failures = 0;
  bool ok() const { return failures == 0 && cosets > 0; }
};

MatsumotoReport matsumoto_verify(const System& sys, size_t max_vertices = 0);

// "start: [0,s,0]" followed by one "step k: kind@pos  [result]" line per
// applied instance, all in bracket form.
std::string trace_to_text(const System& sys, const RewriteTrace& trace);

// The steps as a JSON array of {step, kind, position, forward, expression}.
std::string trace_to_json(const System& sys, const RewriteTrace& trace);

}  // namespace scox
