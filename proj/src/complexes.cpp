#include "scox/complexes.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "scox/io.h"
#include "scox/relations.h"
#include "scox/rewrite.h"

namespace scox {

namespace {

std::string step_text(const System& sys, const Step& st) {
  return (st.up ? "+" : "-") + word_to_string(sys, {st.gen});
}

// Follow a side of a 2-cell through the edge maps. Cells are only created
// for walks that stay reduced, so a missing edge here is a construction bug.
int walk_side(const std::vector<std::map<Step, int>>& out, int v,
              const std::vector<Step>& side) {
  for (const Step& st : side) {
    auto it = out[v].find(st);
    if (it == out[v].end())
      throw std::logic_error("complex: cell side leaves the edge set");
    v = it->second;
  }
  return v;
}

} // namespace

ComplexGraph build_complex(const System& sys, GenSet J, size_t max_vertices) {
  size_t cap = max_vertices ? max_vertices : default_vertex_cap();

  std::vector<Element> group = quotient_reps(sys, sys.full_set(), GenSet{});

  // Vertices: one per (J,I)-coset, over every right subset I.
  std::set<Coset> seen;
  uint32_t subsets = UINT32_C(1) << sys.rank();
  for (uint32_t bits = 0; bits < subsets; ++bits) {
    GenSet I(bits);
    for (const Element& w : group) {
      seen.insert(coset_of(sys, J, w, I));
      if (seen.size() > cap)
        throw std::length_error("complex: vertex bound exceeded");
    }
  }

  ComplexGraph g;
  g.base = J;
  for (const Coset& p : seen)
    g.vertices.push_back({p, coset_lengths(sys, p).total});
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const ComplexVertex& a, const ComplexVertex& b) {
              return a.length != b.length ? a.length < b.length : a.p < b.p;
            });

  std::map<Coset, int> index;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    index.emplace(g.vertices[i].p, static_cast<int>(i));

  // Edges. A down step is reduced from every coset; an up step [p,q] is
  // reduced exactly when it preserves the minimum and the left redundancy.
  std::vector<std::map<Step, int>> out(g.vertices.size());
  for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
    const Coset& p = g.vertices[vi].p;
    GenSet I = p.right;
    for (int s : I.elements()) {
      Coset q = coset_of(sys, J, p.max, I.minus(s));
      out[vi].emplace(Step{false, s}, index.at(q));
    }
    for (int s : (sys.full_set() - I).elements()) {
      Coset q = coset_of(sys, J, p.max, I.plus(s));
      if (q.min == p.min && q.red_left == p.red_left)
        out[vi].emplace(Step{true, s}, index.at(q));
    }
  }
  for (size_t vi = 0; vi < g.vertices.size(); ++vi)
    for (const auto& [st, qi] : out[vi])
      g.edges.push_back({static_cast<int>(vi), qi, st});
  std::sort(g.edges.begin(), g.edges.end(),
            [](const ComplexEdge& a, const ComplexEdge& b) {
              if (a.from != b.from) return a.from < b.from;
              if (a.to != b.to) return a.to < b.to;
              return a.step < b.step;
            });

  // 2-cells, anchored at their source vertex. Down-down squares always
  // exist; up-up squares exist as soon as both single up steps are reduced
  // (the addability criterion); a switchback cell needs its one up step.
  for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
    GenSet I = g.vertices[vi].p.right;
    auto has_up = [&](int s) { return out[vi].count(Step{true, s}) != 0; };
    int v = static_cast<int>(vi);

    std::vector<int> in = I.elements();
    for (size_t a = 0; a < in.size(); ++a)
      for (size_t b = a + 1; b < in.size(); ++b) {
        std::vector<Step> one{{false, in[a]}, {false, in[b]}};
        std::vector<Step> two{{false, in[b]}, {false, in[a]}};
        int to = walk_side(out, v, one);
        if (walk_side(out, v, two) != to)
          throw std::logic_error("complex: down-down sides disagree");
        g.two_cells.push_back({v, to, one, two});
      }

    std::vector<int> outside = (sys.full_set() - I).elements();
    for (size_t a = 0; a < outside.size(); ++a)
      for (size_t b = a + 1; b < outside.size(); ++b) {
        if (!has_up(outside[a]) || !has_up(outside[b])) continue;
        std::vector<Step> one{{true, outside[a]}, {true, outside[b]}};
        std::vector<Step> two{{true, outside[b]}, {true, outside[a]}};
        int to = walk_side(out, v, one);
        if (walk_side(out, v, two) != to)
          throw std::logic_error("complex: up-up sides disagree");
        g.two_cells.push_back({v, to, one, two});
      }

    for (int s : outside) {
      if (!has_up(s)) continue;
      for (int t : I.plus(s).elements()) {
        RelationInstance sb;
        try {
          sb = switchback(sys, I, s, t);
        } catch (const NoRotationError&) {
          continue;
        }
        std::vector<Step> one = sb.lhs.steps;
        std::vector<Step> two = sb.rhs.steps;
        int to = walk_side(out, v, one);
        if (walk_side(out, v, two) != to)
          throw std::logic_error("complex: switchback sides disagree");
        if (two < one) std::swap(one, two);
        g.two_cells.push_back({v, to, one, two});
      }
    }
  }
  std::sort(g.two_cells.begin(), g.two_cells.end(),
            [](const TwoCell& a, const TwoCell& b) {
              return std::tie(a.from, a.to, a.side_a, a.side_b) <
                     std::tie(b.from, b.to, b.side_a, b.side_b);
            });

  return g;
}

std::string complex_dot(const System& sys, const ComplexGraph& g) {
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a",
                                  "#984ea3", "#ff7f00", "#a65628"};
  constexpr int ncolors = sizeof(palette) / sizeof(palette[0]);

  std::string dot = "digraph coxcomplex {\n  rankdir=BT;\n"
                    "  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const ComplexVertex& v = g.vertices[i];
    dot += "  v" + std::to_string(i) + " [label=\"" +
           genset_to_string(sys, v.p.right) + ":" +
           word_to_string(sys, sys.word(v.p.min)) + "\"];\n";
  }
  for (size_t i = 0; i < g.vertices.size();) {
    size_t j = i;
    while (j < g.vertices.size() && g.vertices[j].length == g.vertices[i].length)
      ++j;
    dot += "  { rank=same;";
    for (size_t k = i; k < j; ++k) dot += " v" + std::to_string(k) + ";";
    dot += " }\n";
    i = j;
  }
  for (const ComplexEdge& e : g.edges)
    dot += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) +
           " [label=\"" + step_text(sys, e.step) + "\", color=\"" +
           palette[e.step.gen % ncolors] + "\"];\n";
  dot += "}\n";
  return dot;
}

std::string complex_json(const System& sys, const ComplexGraph& g) {
  nlohmann::json out;
  out["base"] = genset_to_string(sys, g.base);
  out["vertices"] = nlohmann::json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const ComplexVertex& v = g.vertices[i];
    out["vertices"].push_back({{"id", i},
                               {"right", genset_to_string(sys, v.p.right)},
                               {"min", word_to_string(sys, sys.word(v.p.min))},
                               {"length", v.length}});
  }
  out["edges"] = nlohmann::json::array();
  for (const ComplexEdge& e : g.edges)
    out["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"step", step_text(sys, e.step)}});
  out["two_cells"] = nlohmann::json::array();
  for (const TwoCell& c : g.two_cells) {
    nlohmann::json sides = nlohmann::json::array();
    for (const std::vector<Step>* side : {&c.side_a, &c.side_b}) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Step& st : *side) arr.push_back(step_text(sys, st));
      sides.push_back(arr);
    }
    out["two_cells"].push_back({{"from", c.from}, {"to", c.to}, {"sides", sides}});
  }
  return out.dump(2) + "\n";
}

std::string export_complex(const System& sys, const ComplexGraph& g,
                           const std::string& format) {
  if (format == "dot") return complex_dot(sys, g);
  if (format == "json") return complex_json(sys, g);
  throw std::invalid_argument("unknown complex format: " + format);
}

EmbedReport embed_check(const System& sys, GenSet J) {
  ComplexGraph g0 = build_complex(sys, GenSet{});
  ComplexGraph gj = build_complex(sys, J);

  std::map<Coset, int> index0;
  for (size_t i = 0; i < g0.vertices.size(); ++i)
    index0.emplace(g0.vertices[i].p, static_cast<int>(i));

  EmbedReport rep;
  rep.vertices = gj.vertices.size();
  rep.edges = gj.edges.size();
  rep.cells = gj.two_cells.size();

  // The vertex map: a (J,I)-coset goes to the (0,I)-coset with the same
  // maximal element.
  std::vector<int> phi(gj.vertices.size());
  std::set<int> image;
  for (size_t i = 0; i < gj.vertices.size(); ++i) {
    const Coset& q = gj.vertices[i].p;
    phi[i] = index0.at(coset_of(sys, GenSet{}, q.max, q.right));
    image.insert(phi[i]);
  }
  if (image.size() != gj.vertices.size()) ++rep.failures; // not injective

  // Image = the cosets whose maximum has all of J among its left descents.
  std::set<int> expected;
  for (size_t i = 0; i < g0.vertices.size(); ++i)
    if (sys.left_descents(g0.vertices[i].p.max).contains(J))
      expected.insert(static_cast<int>(i));
  if (image != expected) ++rep.failures;

  // Edges carry to edges, bijectively over the image.
  std::set<std::tuple<int, int, Step>> edges0;
  for (const ComplexEdge& e : g0.edges) edges0.insert({e.from, e.to, e.step});
  for (const ComplexEdge& e : gj.edges)
    if (!edges0.count({phi[e.from], phi[e.to], e.step})) ++rep.failures;
  size_t within = 0;
  for (const ComplexEdge& e : g0.edges)
    if (image.count(e.from) && image.count(e.to)) ++within;
  if (within != gj.edges.size()) ++rep.failures;

  // 2-cells likewise; a cell of Cox_0 counts as "over the image" when every
  // vertex on its boundary lies in the image.
  std::vector<std::map<Step, int>> out0(g0.vertices.size());
  for (const ComplexEdge& e : g0.edges) out0[e.from].emplace(e.step, e.to);
  std::set<std::tuple<int, int, std::vector<Step>, std::vector<Step>>> cells0;
  for (const TwoCell& c : g0.two_cells)
    cells0.insert({c.from, c.to, c.side_a, c.side_b});
  for (const TwoCell& c : gj.two_cells)
    if (!cells0.count({phi[c.from], phi[c.to], c.side_a, c.side_b}))
      ++rep.failures;
  size_t cells_within = 0;
  for (const TwoCell& c : g0.two_cells) {
    bool inside = true;
    for (const std::vector<Step>* side : {&c.side_a, &c.side_b}) {
      int v = c.from;
      if (!image.count(v)) inside = false;
      for (const Step& st : *side) {
        v = out0[v].at(st);
        if (!image.count(v)) inside = false;
      }
    }
    if (inside) ++cells_within;
  }
  if (cells_within != gj.two_cells.size()) ++rep.failures;

  return rep;
}

HalfspaceReport halfspace_check(const System& sys) {
  HalfspaceReport rep;
  ComplexGraph g0 = build_complex(sys, GenSet{});

  for (const ComplexVertex& vert : g0.vertices) {
    const Coset& p = vert.p;
    for (int s : (sys.full_set() - p.right).elements()) {
      GenSet Is = p.right.plus(s);
      Coset q = coset_of(sys, GenSet{}, p.min, Is);

      // Reflections whose hyperplane contains the face q are the ones in
      // q.min W_Is q.min^{-1}; p sits on the positive side of such a
      // hyperplane when the reflection shortens p.min.
      bool up_ok = true, down_ok = true;
      Element qinv = sys.inverse(q.min);
      Element pinv = sys.inverse(p.min);
      for (int r = 0; r < sys.num_roots(); ++r) {
        if (!Is.contains(sys.root_support(r))) continue;
        Element t = sys.mul(sys.mul(q.min, sys.reflection(r)), qinv);
        if (in_parabolic(sys, sys.mul(sys.mul(pinv, t), p.min), p.right))
          continue; // hyperplane contains p as well: no side to be on
        int diff = sys.length(sys.mul(t, p.min)) - sys.length(p.min);
        (diff < 0 ? up_ok : down_ok) = false;
      }

      ++rep.pairs;
      if (up_ok != (p.min == q.min)) ++rep.failures;
      if (down_ok != (p.max == q.max)) ++rep.failures;
    }
  }
  return rep;
}

} // namespace scox
