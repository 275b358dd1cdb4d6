#pragma once

// The type A web calculus.  In type A a parabolic subgroup of S_N is a
// product of smaller symmetric groups, so a subset of the generators can be
// drawn as a sequence of labelled strands (block sizes), and a singular
// expression becomes a planar diagram built from two kinds of trivalent
// vertex: a merge glues two adjacent strands, a split cuts one strand in
// two.  This module implements those diagrams as layered webs, their
// evaluation back into parabolic double cosets, conversion to and from
// singular expressions, and the local relations (bigon, associativity,
// coassociativity, the square relations, the rung swap, and the interchange
// of distant vertices) that present the category.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "scox/coset.h"
#include "scox/coxeter.h"
#include "scox/expression.h"

namespace scox {

// A boundary object (n_1, ..., n_k): strand labels, all positive.  A zero
// label is the monoidal unit and is erased on construction, so two objects
// are equal exactly when they name the same parabolic subgroup.
struct ObjectSeq {
  std::vector<int> parts;

  static ObjectSeq of(std::vector<int> parts); // erases zeros, throws on negatives
  int total() const;
  int size() const { return static_cast<int>(parts.size()); }

  // The generators of S_{n_1} x ... x S_{n_k} inside S_N, N = total().
  GenSet parabolic() const;

  friend bool operator==(const ObjectSeq& a, const ObjectSeq& b) { return a.parts == b.parts; }
  friend bool operator!=(const ObjectSeq& a, const ObjectSeq& b) { return !(a == b); }
  friend bool operator<(const ObjectSeq& a, const ObjectSeq& b) { return a.parts < b.parts; }
};

// The object whose parabolic subgroup of S_N is J: block sizes are the gaps
// between consecutive missing generators.
ObjectSeq object_from_parabolic(int N, GenSet J);

// One trivalent vertex.  A merge at pos glues strands pos and pos+1, of
// sizes a and b, into one strand a+b; a split cuts strand pos, of size a+b,
// into (a, b).  Positions are 0-based; the labels are stored so that webs
// compare and render without replaying the diagram.
struct WebOp {
  bool merge = true;
  int pos = 0;
  int a = 0;
  int b = 0;

  friend bool operator==(const WebOp& x, const WebOp& y) {
    return x.merge == y.merge && x.pos == y.pos && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const WebOp& x, const WebOp& y) {
    return std::tie(x.merge, x.pos, x.a, x.b) < std::tie(y.merge, y.pos, y.a, y.b);
  }
};

// A web: the bottom boundary plus one vertex per layer, read bottom to top.
struct Web {
  ObjectSeq bottom;
  std::vector<WebOp> layers;

  ObjectSeq top() const; // walks the layers; throws on an inconsistent web

  friend bool operator==(const Web& a, const Web& b) {
    return a.bottom == b.bottom && a.layers == b.layers;
  }
  friend bool operator!=(const Web& a, const Web& b) { return !(a == b); }
  friend bool operator<(const Web& a, const Web& b) {
    return std::tie(a.bottom.parts, a.layers) < std::tie(b.bottom.parts, b.layers);
  }
};

// Every slice the web passes through: slices[0] is the bottom, slices[i+1]
// the result of layer i.  Throws std::invalid_argument when a layer does not
// fit its slice (position out of range or labels that disagree with the
// strand sizes); this is the validity check everything else relies on.
std::vector<ObjectSeq> web_slices(const Web& w);

Web identity_web(const ObjectSeq& n);

// Append one vertex to the top of w.  then_merge glues strands pos and
// pos+1; then_split cuts strand pos into (a, b), where a zero part makes
// the split the identity and appends nothing.
Web then_merge(Web w, int pos);
Web then_split(Web w, int pos, int a, int b);

// Stacking: all of first, then all of second.  The boundaries must agree.
Web compose(const Web& first, const Web& second);

// Side by side, left of right.  The layer order puts every vertex of the
// left factor first; the interchange relation slides them past each other.
Web tensor(const Web& left, const Web& right);

// Sum of ab over all vertices; equals the length of the singular expression
// the web encodes, so a web is reduced exactly when its degree equals the
// total length of the coset it evaluates to.
int degree(const Web& w);

// The symmetric group S_N as a Coxeter system of type A_{N-1}, with the
// default labels s1..s(N-1).  N = 0 and N = 1 both give the trivial system.
std::unique_ptr<System> symmetric_group(int N);

// The double coset a web denotes: left boundary the bottom parabolic, right
// the top.  sys must be symmetric_group(total) (checked).
Coset evaluate_web(const System& sys, const Web& w);

// A web is a singular expression over S_N in diagram form: merging the
// strands on either side of cut c adds the generator s_c, splitting removes
// it.  Both directions validate and throw std::invalid_argument.
Expression expression_from_web(const Web& w);
Web web_from_expression(int N, const Expression& e);

enum class WebRelation {
  Bigon,        // split then merge of the same strands: erased
  Assoc,        // two merges of three adjacent strands: reassociated
  Coassoc,      // two splits of one strand into three: reassociated
  Square1,      // merge-split square, crossing cuts, a+b < N on the block
  Square2,      // merge-split square, crossing cuts, a+b > N on the block
  NonRedSquare, // the non-reduced square: contracts to a merge-split pair
  RungSwap,     // swaps the rung between the two reduced square shapes
  Interchange,  // distant vertices slide past each other
};

const char* web_relation_name(WebRelation r);
WebRelation web_relation_from_name(const std::string& name);

// Apply one relation to the pattern starting at layer `at`, matching either
// side (Bigon and NonRedSquare only contract; their inverses would need
// extra data).  Throws std::invalid_argument when the pattern does not
// match.  Evaluation is always preserved; degree is preserved by every
// relation except the two contracting ones.
Web apply_web_relation(const Web& w, WebRelation which, int at);

// The same, but returns std::nullopt instead of throwing on a mismatch.
// Closure computations probe every (relation, layer) pair, so the common
// case is the miss; this keeps it off the exception path.
std::optional<Web> try_web_relation(const Web& w, WebRelation which, int at);

// Number of morphisms n -> m, i.e. of double cosets in S_N between the two
// parabolic subgroups.  Zero when the totals differ.  Counted by direct
// orbit enumeration, so N is capped at 8 (std::length_error beyond).
std::uint64_t hom_count(const ObjectSeq& n, const ObjectSeq& m);

// Text form "(1,2,1) ; merge@1(1,2) ; split@1(2,1)" and a layered JSON
// form; positions are 1-based in both.  Pinned formats, spoken by the
// command line tools.
std::string web_to_text(const Web& w);
Web web_from_text(const std::string& text);
std::string web_to_json(const Web& w);
Web web_from_json(const std::string& text);

} // namespace scox
