#pragma once

// The singular Coxeter complex Cox_J, as a 2-skeleton: one vertex per
// (J,I)-coset over all right subsets I, a directed edge for every reduced
// one-step extension, and a 2-cell for every braid relation between reduced
// paths.  Includes the embedding of Cox_J into Cox_0 and the hyperplane
// criterion for edge reducedness.

#include <cstdint>
#include <string>
#include <vector>

#include "scox/coset.h"
#include "scox/coxeter.h"
#include "scox/expression.h"

namespace scox {

struct ComplexVertex {
  Coset p;
  int length = 0;
};

struct ComplexEdge {
  int from = 0;
  int to = 0;
  Step step;  // +s when the right set grows, -s when it shrinks
};

// The two sides of one braid relation, read as step sequences from a common
// source vertex to a common target.  Sides are stored unordered (side_a is
// the lexicographically smaller one); the relation's orientation is not part
// of the cell.
struct TwoCell {
  int from = 0;
  int to = 0;
  std::vector<Step> side_a;
  std::vector<Step> side_b;
};

struct ComplexGraph {
  GenSet base;  // the fixed left subset J
  std::vector<ComplexVertex> vertices;
  std::vector<ComplexEdge> edges;
  std::vector<TwoCell> two_cells;
};

// Builds Cox_J.  Throws std::length_error when the vertex count would exceed
// max_vertices (0 means the SCOX_MAX_VERTICES default).
ComplexGraph build_complex(const System& sys, GenSet J, size_t max_vertices = 0);

// DOT with vertices labeled "I:minword", one color per generator, and one
// rank per length grade; JSON with vertices/edges/two_cells arrays.  Both
// byte-stable for a fixed graph.
std::string complex_dot(const System& sys, const ComplexGraph& g);
std::string complex_json(const System& sys, const ComplexGraph& g);

// Dispatch on "dot" / "json"; anything else throws std::invalid_argument.
std::string export_complex(const System& sys, const ComplexGraph& g, const std::string& format);

// Checks the embedding Cox_J -> Cox_0 sending a (J,I)-coset q to the
// (0,I)-coset with the same maximal element: injective on vertices, image
// exactly the cosets whose maximum has all of J among its left descents, and
// cell-for-cell matching of edges and 2-cells over that image.
struct EmbedReport {
  uint64_t vertices = 0;
  uint64_t edges = 0;
  uint64_t cells = 0;
  uint64_t failures = 0;
  bool ok() const { return failures == 0 && vertices > 0; }
};

EmbedReport embed_check(const System& sys, GenSet J);

// Verifies the hyperplane criterion at J = 0: for every (0,I)-coset p and
// every one-step extension q at I+s, the up-step [p,q] is reduced exactly
// when p avoids the positive side of every root hyperplane containing q, and
// the down-step [q,p] is reduced exactly when p avoids every negative side.
struct HalfspaceReport {
  uint64_t pairs = 0;
  uint64_t failures = 0;
  bool ok() const { return failures == 0 && pairs > 0; }
};

HalfspaceReport halfspace_check(const System& sys);

}  // namespace scox
