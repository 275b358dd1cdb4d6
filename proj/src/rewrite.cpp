#include "scox/rewrite.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <utility>

#include <json.hpp>

#include "scox/io.h"

namespace scox {

namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t sat_add(uint64_t a, uint64_t b) { return kSaturated - a < b ? kSaturated : a + b; }

Expression prefix_expr(const Expression& e, int k) {
  Expression p;
  p.start = e.start;
  p.steps.assign(e.steps.begin(), e.steps.begin() + k);
  return p;
}

Expression drop_first(const Expression& e) {
  const Step& a = e.steps.front();
  Expression t;
  t.start = a.up ? e.start.plus(a.gen) : e.start.minus(a.gen);
  t.steps.assign(e.steps.begin() + 1, e.steps.end());
  return t;
}

RelationInstance inverted(RelationInstance r) {
  std::swap(r.lhs, r.rhs);
  r.forward = !r.forward;
  return r;
}

// A step that can end a reduced expression of p, along with the coset such
// an expression would pass through just before it.  Candidate validity is
// checked the same way some_rex checks it: the length bookkeeping has to
// telescope and the step has to recompose to p.
struct LastStep {
  Step step;
  Coset pred;
};

std::vector<LastStep> last_steps(const System& sys, const Coset& p) {
  std::vector<LastStep> out;
  const GenSet J = p.left, I = p.right;
  int len = coset_lengths(sys, p).total;
  for (int t : (sys.right_descents(p.max) - I).elements()) {
    GenSet It = I.plus(t);
    if (!sys.is_finitary(It)) continue;
    Coset pred = coset_of(sys, J, p.max, It);
    int inc = sys.longest_length(It) - sys.longest_length(I);
    if (coset_lengths(sys, pred).total + inc != len) continue;
    if (coset_of(sys, J, pred.max, I) != p) continue;
    out.push_back({{false, t}, std::move(pred)});
  }
  for (int t : I.elements()) {
    Coset pred = coset_of(sys, J, p.min, I.minus(t));
    int inc = sys.longest_length(I) - sys.longest_length(I.minus(t));
    if (coset_lengths(sys, pred).total + inc != len) continue;
    if (coset_of(sys, J, pred.min, I) != p) continue;
    out.push_back({{true, t}, std::move(pred)});
  }
  return out;
}

// Reduced expression of q with a prescribed final step.  The step must be a
// valid ending (a removable last letter, or an addable one); anything else
// is a caller bug.
Expression rex_ending(const System& sys, const Coset& q, Step last) {
  Coset pred = last.up ? coset_of(sys, q.left, q.min, q.right.minus(last.gen))
                       : coset_of(sys, q.left, q.max, q.right.plus(last.gen));
  Expression e = some_rex(sys, pred);
  e.steps.push_back(last);
  if (!is_reduced(sys, e) || evaluate(sys, e) != q)
    throw std::logic_error("rex_ending: final step is not valid for the coset");
  return e;
}

// Reduced expression of q ending with the two given steps, if one exists.
bool rex_ending_two(const System& sys, const Coset& q, Step second_last, Step last,
                    Expression& out) {
  const GenSet J = q.left;
  Coset pred1 = last.up ? coset_of(sys, J, q.min, q.right.minus(last.gen))
                        : coset_of(sys, J, q.max, q.right.plus(last.gen));
  const GenSet I1 = pred1.right;
  Coset pred2 = second_last.up ? coset_of(sys, J, pred1.min, I1.minus(second_last.gen))
                               : coset_of(sys, J, pred1.max, I1.plus(second_last.gen));
  Expression e = some_rex(sys, pred2);
  e.steps.push_back(second_last);
  e.steps.push_back(last);
  try {
    validate(sys, e);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!is_reduced(sys, e) || evaluate(sys, e) != q) return false;
  out = std::move(e);
  return true;
}

// Reduced expression of p opening with the two given steps.  The remainder
// is located by the junction rule: if the two-step head evaluates to c and
// ends at the subset X, the tail coset contains w_X * max(c)^-1 * max(p).
Expression rex_starting(const System& sys, const Coset& p, Step a, Step b) {
  Expression head;
  head.start = p.left;
  head.steps = {a, b};
  validate(sys, head);
  Coset c = evaluate(sys, head);
  GenSet X = head.end();
  Element rem = sys.mul(sys.mul(sys.longest(X), sys.inverse(c.max)), p.max);
  Coset m = coset_of(sys, X, rem, p.right);
  Expression e = concat(head, some_rex(sys, m));
  if (!is_reduced(sys, e) || evaluate(sys, e) != p)
    throw std::logic_error("rex_starting: interpolant is not reduced");
  return e;
}

std::vector<RelationInstance> path_impl(const System& sys, const Expression& A,
                                        const Expression& B) {
  if (A == B) return {};
  // Distinct reduced expressions of one coset both have at least one step.
  Step a = A.steps.front(), b = B.steps.front();

  if (a == b) {
    std::vector<RelationInstance> sub = path_impl(sys, drop_first(A), drop_first(B));
    for (RelationInstance& r : sub) ++r.position;
    return sub;
  }

  Coset p = evaluate(sys, A);

  if (a.up == b.up) {
    // Interpolate through an expression opening with both letters; its first
    // two steps commute, which joins A's opening to B's.
    Expression M = rex_starting(sys, p, a, b);
    RelationInstance swap_front;
    swap_front.kind = a.up ? RelationKind::UpUp : RelationKind::DownDown;
    swap_front.position = 0;
    swap_front.lhs.start = p.left;
    swap_front.lhs.steps = {a, b};
    swap_front.rhs.start = p.left;
    swap_front.rhs.steps = {b, a};
    Expression M2 = apply(sys, M, swap_front);
    std::vector<RelationInstance> out = path_impl(sys, A, M);
    out.push_back(swap_front);
    std::vector<RelationInstance> rest = path_impl(sys, M2, B);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  if (a.up) {
    // Work from the side that opens with a removal and invert afterwards.
    std::vector<RelationInstance> rev = path_impl(sys, B, A);
    std::vector<RelationInstance> out;
    out.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(inverted(*it));
    return out;
  }

  // A opens with -u, B with +s.  The switchback for (J, s, t), with t the
  // conjugate of u through the longest elements of J and Js, has its short
  // side opening +s and its long side opening -u, which bridges the two.
  const int u = a.gen, s = b.gen;
  const GenSet J = p.left;
  const GenSet Js = J.plus(s);
  int v = sys.as_simple(sys.mul(sys.mul(sys.longest(J), sys.generator(u)), sys.longest(J)));
  if (v < 0) throw std::logic_error("matsumoto_path: conjugate of the removal is not simple");
  int t = sys.as_simple(sys.mul(sys.mul(sys.longest(Js), sys.generator(v)), sys.longest(Js)));
  if (t < 0) throw std::logic_error("matsumoto_path: rotation target is not simple");

  RelationInstance sb = switchback(sys, J, s, t);
  if (!(sb.rhs.steps.front() == Step{false, u}))
    throw std::logic_error("matsumoto_path: switchback does not open with the expected removal");

  Expression N = rex_starting(sys, p, {true, s}, {false, t});
  Expression N2 = apply(sys, N, sb);  // the long side now sits at the front
  std::vector<RelationInstance> out = path_impl(sys, A, N2);
  out.push_back(inverted(sb));
  std::vector<RelationInstance> rest = path_impl(sys, N, B);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

uint64_t count_impl(const System& sys, const Coset& p, std::map<Coset, uint64_t>& memo) {
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  uint64_t total = 0;
  if (coset_lengths(sys, p).total == 0)
    total = 1;
  else
    for (const LastStep& c : last_steps(sys, p)) total = sat_add(total, count_impl(sys, c.pred, memo));
  memo.emplace(p, total);
  return total;
}

const std::vector<Expression>& set_impl(const System& sys, const Coset& p,
                                        std::map<Coset, std::vector<Expression>>& memo,
                                        size_t cap, size_t& used) {
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  std::vector<Expression> out;
  if (coset_lengths(sys, p).total == 0) {
    Expression e;
    e.start = p.left;
    out.push_back(e);
  } else {
    for (const LastStep& c : last_steps(sys, p)) {
      const std::vector<Expression>& tails = set_impl(sys, c.pred, memo, cap, used);
      for (const Expression& r : tails) {
        out.push_back(r);
        out.back().steps.push_back(c.step);
      }
    }
  }
  used += out.size();
  if (used > cap)
    throw RexBoundError("reduced expression enumeration exceeded " + std::to_string(cap) +
                        " vertices");
  return memo.emplace(p, std::move(out)).first->second;
}

}  // namespace

Expression replay(const System& sys, const RewriteTrace& trace) {
  Expression cur = trace.start;
  for (const RelationInstance& r : trace.steps) cur = apply(sys, cur, r);
  if (!(cur == trace.result)) throw std::logic_error("replay: trace result mismatch");
  return cur;
}

std::vector<RelationInstance> matsumoto_path(const System& sys, const Expression& from,
                                             const Expression& to) {
  if (!is_reduced(sys, from) || !is_reduced(sys, to))
    throw std::invalid_argument("matsumoto_path: both expressions must be reduced");
  if (evaluate(sys, from) != evaluate(sys, to))
    throw std::invalid_argument("matsumoto_path: expressions evaluate to different cosets");
  return path_impl(sys, from, to);
}

RewriteTrace normalize(const System& sys, const Expression& e) {
  validate(sys, e);
  RewriteTrace tr;
  tr.start = e;
  Expression cur = e;
  auto emit = [&](const RelationInstance& r) {
    cur = apply(sys, cur, r);
    tr.steps.push_back(r);
  };

  // Invariant: the prefix of width k is reduced.  When step k breaks it, the
  // offender is an addition +t (removals never do); braid moves rearrange
  // the prefix until the offending letter meets its cancelling partner or
  // commutes past a letter that absorbs the failure.
  int k = 0;
  while (k < cur.width()) {
    if (reduced_at(sys, cur, k)) {
      ++k;
      continue;
    }
    for (;;) {
      Step bad = cur.steps[k];
      if (!bad.up) throw std::logic_error("normalize: a removal failed reducedness");
      const int t = bad.gen;
      Expression R = prefix_expr(cur, k);
      Coset q = evaluate(sys, R);
      const GenSet I = q.right;

      if (q.red_right == I) {
        // The prefix has a reduced form ending -t; route there and cancel.
        Expression target = rex_ending(sys, q, {false, t});
        for (const RelationInstance& r : matsumoto_path(sys, R, target)) emit(r);
        int pos = target.width() - 1;
        RelationInstance quad;
        quad.kind = RelationKind::StarQuadratic;
        quad.position = pos;
        quad.forward = true;
        quad.lhs.start = I.plus(t);
        quad.lhs.steps = {{false, t}, {true, t}};
        quad.rhs.start = I.plus(t);
        emit(quad);
        k = pos;
        break;
      }

      // Some letter of I is redundant at the end; swapping it past the
      // offender shrinks the failure.
      const int s = (I - q.red_right).first();
      Expression target = rex_ending(sys, q, {true, s});
      for (const RelationInstance& r : matsumoto_path(sys, R, target)) emit(r);
      int pos = target.width() - 1;
      RelationInstance swap_up;
      swap_up.kind = RelationKind::UpUp;
      swap_up.position = pos;
      swap_up.lhs.start = I.minus(s);
      swap_up.lhs.steps = {{true, s}, {true, t}};
      swap_up.rhs.start = I.minus(s);
      swap_up.rhs.steps = {{true, t}, {true, s}};
      emit(swap_up);
      k = pos;
      if (!reduced_at(sys, cur, k)) continue;  // +t still offends here
      ++k;
      if (reduced_at(sys, cur, k)) {
        ++k;  // the displaced +s settled as well
        break;
      }
      // Otherwise +s offends at position k; go around again.
    }
  }
  tr.result = cur;
  return tr;
}

size_t default_vertex_cap() {
  if (const char* env = std::getenv("SCOX_MAX_VERTICES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return 1'000'000;
}

uint64_t rex_count(const System& sys, const Coset& p) {
  std::map<Coset, uint64_t> memo;
  return count_impl(sys, p, memo);
}

std::vector<Expression> rex_set(const System& sys, const Coset& p, size_t max_vertices) {
  size_t cap = max_vertices ? max_vertices : default_vertex_cap();
  std::map<Coset, std::vector<Expression>> memo;
  size_t used = 0;
  std::vector<Expression> out = set_impl(sys, p, memo, cap, used);
  std::sort(out.begin(), out.end());
  return out;
}

RexGraph rex_graph(const System& sys, const Coset& p, size_t max_vertices) {
  RexGraph g;
  g.p = p;
  g.vertices = rex_set(sys, p, max_vertices);
  std::map<Expression, int> index;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) index.emplace(g.vertices[i], i);

  // Quadratic instances never stay inside the reduced class: contractions
  // have nothing to match and expansions create a cancelling pair.  The
  // braid kinds permute the class, so every application lands on a vertex.
  std::map<std::pair<int, int>, RexEdge> edges;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    for (const RelationInstance& r : enumerate_redexes(sys, g.vertices[i])) {
      if (r.kind == RelationKind::StarQuadratic) continue;
      Expression w = apply(sys, g.vertices[i], r);
      auto it = index.find(w);
      if (it == index.end() || it->second == i)
        throw std::logic_error("rex_graph: relation left the set of reduced expressions");
      if (i > it->second) continue;  // recorded from the lower endpoint
      auto [pos, fresh] = edges.try_emplace({i, it->second}, RexEdge{i, it->second, r, 1});
      if (!fresh) ++pos->second.multiplicity;
    }
  }
  g.edges.reserve(edges.size());
  for (auto& [key, e] : edges) {
    (void)key;
    g.edges.push_back(std::move(e));
  }
  return g;
}

bool is_connected(const RexGraph& g) {
  if (g.vertices.size() <= 1) return true;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const RexEdge& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(g.vertices.size(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  size_t reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
  }
  return reached == g.vertices.size();
}

std::string rex_graph_dot(const System& sys, const RexGraph& g) {
  std::string out = "graph rexgraph {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + expression_brackets(sys, g.vertices[i]) +
           "\"];\n";
  for (const RexEdge& e : g.edges) {
    out += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) + " [label=\"" +
           relation_kind_name(e.via.kind) + "@" + std::to_string(e.via.position);
    if (e.multiplicity > 1) out += " x" + std::to_string(e.multiplicity);
    out += "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

// Certifies connectivity of the reduced expression graph of p without
// enumerating it.  Expressions sharing a final step form a connected cluster
// once the predecessor coset's graph is known connected (their tails range
// over exactly its expressions, and a relation between tails applies
// unchanged under the shared final step).  It then suffices to bridge the
// clusters: additions pairwise through expressions ending with both letters,
// removals likewise, and one mixed pair through an explicit relation path.
bool constructive_connected(const System& sys, const Coset& p,
                            const std::set<Coset>& known_connected) {
  std::vector<LastStep> cands = last_steps(sys, p);
  if (cands.empty()) return coset_lengths(sys, p).total == 0;
  std::vector<const LastStep*> downs, ups;
  for (const LastStep& c : cands) (c.step.up ? ups : downs).push_back(&c);
  for (const LastStep& c : cands)
    if (!known_connected.count(c.pred))
      throw std::logic_error("matsumoto_verify: predecessor visited out of order");

  Expression bridge;
  for (size_t i = 0; i + 1 < ups.size(); ++i)
    if (!rex_ending_two(sys, p, ups[i + 1]->step, ups[i]->step, bridge)) return false;
  for (size_t i = 0; i + 1 < downs.size(); ++i)
    if (!rex_ending_two(sys, p, downs[i + 1]->step, downs[i]->step, bridge)) return false;

  if (!ups.empty() && !downs.empty()) {
    Expression from = rex_ending(sys, p, downs[0]->step);
    Expression to = rex_ending(sys, p, ups[0]->step);
    Expression cur = from;
    for (const RelationInstance& r : matsumoto_path(sys, from, to)) cur = apply(sys, cur, r);
    if (!(cur == to)) return false;
  }
  return true;
}

}  // namespace

MatsumotoReport matsumoto_verify(const System& sys, size_t max_vertices) {
  size_t cap = max_vertices ? max_vertices : default_vertex_cap();
  MatsumotoReport rep;
  std::vector<Element> all = quotient_reps(sys, sys.full_set(), GenSet());
  std::map<Coset, uint64_t> counts;
  const uint32_t nsub = 1u << sys.rank();

  for (uint32_t jbits = 0; jbits < nsub; ++jbits) {
    GenSet J(jbits);
    std::vector<std::pair<int, Coset>> cosets;
    std::set<Coset> seen;
    for (uint32_t ibits = 0; ibits < nsub; ++ibits) {
      GenSet I(ibits);
      for (const Element& w : all) {
        Coset p = coset_of(sys, J, w, I);
        if (seen.insert(p).second) cosets.push_back({coset_lengths(sys, p).total, p});
      }
    }
    // Ascending length: every predecessor of a coset shares its left set and
    // is strictly shorter, so the constructive tier's induction is in order.
    std::sort(cosets.begin(), cosets.end());

    std::set<Coset> known_connected;
    for (const auto& [len, p] : cosets) {
      (void)len;
      MatsumotoReport::Entry e;
      e.p = p;
      e.rexes = count_impl(sys, p, counts);
      bool done = false;
      if (e.rexes <= cap) {
        try {
          RexGraph g = rex_graph(sys, p, cap);
          e.exhaustive = true;
          e.connected = is_connected(g) && g.vertices.size() == e.rexes && e.rexes >= 1;
          ++rep.exhaustive;
          done = true;
        } catch (const RexBoundError&) {
          // The coset fits the cap but its sub-enumeration does not; fall
          // back to the constructive certificate.
        }
      }
      if (!done) e.connected = constructive_connected(sys, p, known_connected);
      if (e.connected)
        known_connected.insert(p);
      else
        ++rep.failures;
      ++rep.cosets;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

std::string trace_to_text(const System& sys, const RewriteTrace& trace) {
  std::string out = "start: " + expression_brackets(sys, trace.start) + "\n";
  Expression cur = trace.start;
  int k = 0;
  for (const RelationInstance& r : trace.steps) {
    cur = apply(sys, cur, r);
    out += "step " + std::to_string(++k) + ": " + relation_kind_name(r.kind) + "@" +
           std::to_string(r.position) + "  " + expression_brackets(sys, cur) + "\n";
  }
  return out;
}

std::string trace_to_json(const System& sys, const RewriteTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  Expression cur = trace.start;
  int k = 0;
  for (const RelationInstance& r : trace.steps) {
    cur = apply(sys, cur, r);
    steps.push_back({{"step", ++k},
                     {"kind", relation_kind_name(r.kind)},
                     {"position", r.position},
                     {"forward", r.forward},
                     {"expression", expression_brackets(sys, cur)}});
  }
  return steps.dump(2);
}

}  // namespace scox
