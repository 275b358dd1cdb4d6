// The singular Coxeter complex: vertex/edge/cell structure against
// independent oracles (coset counting, reduced-expression sets, the grading),
// the embedding of Cox_J into Cox_0, the hyperplane criterion, and the two
// pinned export formats.

#include "doctest.h"

#include "scox/complexes.h"
#include "scox/coset.h"
#include "scox/expression.h"
#include "scox/io.h"
#include "scox/rewrite.h"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace scox;

namespace {

// Out-edge lookup rebuilt from the edge list (independently of how
// build_complex found them).
std::vector<std::map<Step, int>> out_edges(const ComplexGraph& g) {
  std::vector<std::map<Step, int>> out(g.vertices.size());
  for (const ComplexEdge& e : g.edges) {
    auto [it, fresh] = out[e.from].emplace(e.step, e.to);
    REQUIRE(fresh); // one edge per (source, step)
    (void)it;
  }
  return out;
}

int vertex_index(const ComplexGraph& g, const Coset& p) {
  for (size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i].p == p) return static_cast<int>(i);
  return -1;
}

// Every directed path from the identity vertex, as the expression its step
// labels spell. The complex is graded, so plain recursion terminates.
void collect_paths(const ComplexGraph& g, const std::vector<std::map<Step, int>>& out,
                   int v, Expression& prefix, std::vector<std::vector<Expression>>& acc) {
  acc[v].push_back(prefix);
  for (const auto& [st, w] : out[v]) {
    prefix.steps.push_back(st);
    collect_paths(g, out, w, prefix, acc);
    prefix.steps.pop_back();
  }
}

void check_against_rex_sets(const System& sys, GenSet J) {
  ComplexGraph g = build_complex(sys, J);
  auto out = out_edges(g);
  int id = vertex_index(g, identity_coset(sys, J));
  REQUIRE(id >= 0);

  std::vector<std::vector<Expression>> paths(g.vertices.size());
  Expression prefix{J, {}};
  collect_paths(g, out, id, prefix, paths);

  for (size_t i = 0; i < g.vertices.size(); ++i) {
    std::sort(paths[i].begin(), paths[i].end());
    CHECK(paths[i] == rex_set(sys, g.vertices[i].p));
  }
}

// Path counting by dynamic programming over the grading; compared against
// rex_count this checks the whole edge set at once.
void check_path_counts(const System& sys, GenSet J) {
  ComplexGraph g = build_complex(sys, J);
  int id = vertex_index(g, identity_coset(sys, J));
  REQUIRE(id >= 0);

  std::vector<uint64_t> paths(g.vertices.size(), 0);
  paths[id] = 1;
  for (const ComplexEdge& e : g.edges) {
    REQUIRE(e.from < e.to); // grading makes the sorted order topological
    paths[e.to] += paths[e.from];
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    CHECK(paths[i] == rex_count(sys, g.vertices[i].p));
}

void check_grading(const System& sys, GenSet J) {
  ComplexGraph g = build_complex(sys, J);
  for (const ComplexEdge& e : g.edges) {
    GenSet I = g.vertices[e.from].p.right;
    int inc = e.step.up
                  ? sys.longest_length(I.plus(e.step.gen)) - sys.longest_length(I)
                  : sys.longest_length(I) - sys.longest_length(I.minus(e.step.gen));
    CHECK(inc > 0);
    CHECK(g.vertices[e.to].length - g.vertices[e.from].length == inc);
    CHECK(g.vertices[e.to].p.right ==
          (e.step.up ? I.plus(e.step.gen) : I.minus(e.step.gen)));
  }
}

// Semantic audit of a 2-cell: extending any reduced expression of the source
// coset by either side stays reduced and reaches the target coset.
void check_cells(const System& sys, GenSet J) {
  ComplexGraph g = build_complex(sys, J);
  for (const TwoCell& c : g.two_cells) {
    CHECK(c.side_a < c.side_b);
    Expression base = some_rex(sys, g.vertices[c.from].p);
    for (const std::vector<Step>* side : {&c.side_a, &c.side_b}) {
      Expression e = base;
      e.steps.insert(e.steps.end(), side->begin(), side->end());
      CHECK(is_reduced(sys, e));
      CHECK(evaluate(sys, e) == g.vertices[c.to].p);
    }
  }
}

uint64_t group_order(const System& sys) {
  return quotient_reps(sys, sys.full_set(), GenSet{}).size();
}

} // namespace

TEST_CASE("Cox_0 of S3 is the thirteen-cell hexagon picture") {
  auto sys = System::from_name("A2");
  ComplexGraph g = build_complex(*sys, GenSet{});

  REQUIRE(g.vertices.size() == 13);
  std::map<uint32_t, int> by_right;
  for (const ComplexVertex& v : g.vertices) by_right[v.p.right.bits()]++;
  CHECK(by_right[GenSet{}.bits()] == 6);
  CHECK(by_right[GenSet{0}.bits()] == 3);
  CHECK(by_right[GenSet{1}.bits()] == 3);
  CHECK(by_right[GenSet{0, 1}.bits()] == 1);

  CHECK(g.edges.size() == 16);
  // Two khaki squares (up-up at the bottom, down-down at the top) and the
  // two fuschia switchback cells anchored at the singleton cosets of e.
  CHECK(g.two_cells.size() == 4);

  // The center vertex is the (0,st)-coset of e, the whole group.
  int center = vertex_index(g, coset_of(*sys, GenSet{}, sys->identity(), GenSet{0, 1}));
  REQUIRE(center >= 0);
  CHECK(sys->is_identity(g.vertices[center].p.min));
  CHECK(g.vertices[center].length == 3); // one reduced expression is [0 +s +t]

  // Going down from the center reaches the cosets of the longest element
  // only: {st,sts} and {ts,sts}, never {t,ts}.
  Element t = sys->generator(1);
  int tcoset = vertex_index(g, coset_of(*sys, GenSet{}, t, GenSet{0}));
  REQUIRE(tcoset >= 0); // {t, ts}
  int down = 0;
  for (const ComplexEdge& e : g.edges) {
    CHECK(!(e.from == center && e.to == tcoset));
    CHECK(!(e.from == tcoset && e.to == center));
    if (e.from == center) {
      ++down;
      CHECK(!e.step.up);
      CHECK(g.vertices[e.to].p.max == g.vertices[center].p.max);
    }
  }
  CHECK(down == 2);
}

TEST_CASE("Cox_st of S3 has one vertex per right subset, all on the whole group") {
  auto sys = System::from_name("A2");
  ComplexGraph g = build_complex(*sys, sys->full_set());
  REQUIRE(g.vertices.size() == 4);
  std::set<uint32_t> rights;
  for (const ComplexVertex& v : g.vertices) {
    rights.insert(v.p.right.bits());
    CHECK(sys->is_identity(v.p.min));
    CHECK(v.p.max == sys->longest(sys->full_set()));
  }
  CHECK(rights.size() == 4);
}

TEST_CASE("vertex counts at J = 0 match the coset-counting oracle") {
  for (const char* name : {"A2", "B2", "I2(5)", "A3", "B3"}) {
    auto sys = System::from_name(name);
    ComplexGraph g = build_complex(*sys, GenSet{});
    uint64_t order = group_order(*sys);

    std::map<uint32_t, uint64_t> by_right;
    for (const ComplexVertex& v : g.vertices) by_right[v.p.right.bits()]++;

    uint32_t subsets = UINT32_C(1) << sys->rank();
    CHECK(by_right.size() == subsets);
    for (uint32_t bits = 0; bits < subsets; ++bits) {
      uint64_t sub = quotient_reps(*sys, GenSet(bits), GenSet{}).size();
      CHECK(by_right[bits] == order / sub);
    }
  }
}

TEST_CASE("paths from the identity vertex are exactly the reduced expression sets") {
  check_against_rex_sets(*System::from_name("A2"), GenSet{});
  check_against_rex_sets(*System::from_name("A2"), GenSet{0});
  check_against_rex_sets(*System::from_name("B2"), GenSet{});
  check_against_rex_sets(*System::from_name("B2"), GenSet{1});
}

TEST_CASE("path counts equal rex counts across S4 and B3, all base subsets") {
  for (const char* name : {"A3", "B3"}) {
    auto sys = System::from_name(name);
    uint32_t subsets = UINT32_C(1) << sys->rank();
    for (uint32_t bits = 0; bits < subsets; ++bits)
      check_path_counts(*sys, GenSet(bits));
  }
}

TEST_CASE("every edge raises the grading by its step increment") {
  check_grading(*System::from_name("A2"), GenSet{});
  check_grading(*System::from_name("A3"), GenSet{});
  check_grading(*System::from_name("A3"), GenSet{0, 2});
  check_grading(*System::from_name("B2"), GenSet{0});
  check_grading(*System::from_name("I2(7)"), GenSet{});
}

TEST_CASE("2-cells walk both sides of a braid relation between reduced paths") {
  check_cells(*System::from_name("A2"), GenSet{});
  check_cells(*System::from_name("B2"), GenSet{});
  check_cells(*System::from_name("A3"), GenSet{});
  check_cells(*System::from_name("A3"), GenSet{0});
  check_cells(*System::from_name("B3"), GenSet{});
}

TEST_CASE("cell inventories: squares everywhere, switchbacks where the type allows") {
  auto shapes = [](const ComplexGraph& g) {
    std::map<std::pair<size_t, size_t>, int> out;
    for (const TwoCell& c : g.two_cells) out[{c.side_a.size(), c.side_b.size()}]++;
    return out;
  };
  using Shapes = std::map<std::pair<size_t, size_t>, int>;

  // m = 5: the long side of [J + s - s] zigzags through m - 1 valleys.
  ComplexGraph g5 = build_complex(*System::from_name("I2(5)"), GenSet{});
  CHECK(shapes(g5) == Shapes{{{2, 2}, 2}, {{8, 2}, 2}});

  // B2: w_0 is central, so the adding-and-removing-s cells degenerate to
  // unique expressions; the two hexagons pair s with t instead.
  ComplexGraph gb = build_complex(*System::from_name("B2"), GenSet{});
  CHECK(gb.vertices.size() == 17);
  CHECK(gb.edges.size() == 20);
  CHECK(shapes(gb) == Shapes{{{2, 2}, 2}, {{6, 2}, 2}});

  // S4: commuting squares plus width-4 switchbacks of both flavors.
  ComplexGraph ga = build_complex(*System::from_name("A3"), GenSet{});
  CHECK(ga.vertices.size() == 75);
  CHECK(ga.edges.size() == 134);
  CHECK(shapes(ga) == Shapes{{{2, 2}, 46}, {{4, 2}, 22}});

  // The fuschia 2-cell of the introduction: at the identity (s,s)-coset of
  // S3, [s, st, s] and [s, 0, t, 0, s] bound a cell.
  auto a2 = System::from_name("A2");
  ComplexGraph gs = build_complex(*a2, GenSet{0});
  CHECK(shapes(gs) == Shapes{{{2, 2}, 1}, {{4, 2}, 1}});
  bool found = false;
  for (const TwoCell& c : gs.two_cells)
    if (c.side_b == std::vector<Step>{{true, 1}, {false, 1}}) {
      found = true;
      CHECK(gs.vertices[c.from].p == identity_coset(*a2, GenSet{0}));
      CHECK(c.side_a ==
            std::vector<Step>({{false, 0}, {true, 1}, {false, 1}, {true, 0}}));
      CHECK(gs.vertices[c.to].p ==
            coset_of(*a2, GenSet{0}, a2->longest(a2->full_set()), GenSet{0}));
    }
  CHECK(found);
}

TEST_CASE("unique source and unique sink") {
  struct Case {
    const char* name;
    GenSet J;
  };
  for (const Case& c : {Case{"A2", GenSet{}}, Case{"A2", GenSet{0}},
                        Case{"A3", GenSet{}}, Case{"A3", GenSet{1}}}) {
    auto sys = System::from_name(c.name);
    ComplexGraph g = build_complex(*sys, c.J);

    std::vector<int> indeg(g.vertices.size(), 0), outdeg(g.vertices.size(), 0);
    for (const ComplexEdge& e : g.edges) {
      ++outdeg[e.from];
      ++indeg[e.to];
    }
    std::vector<int> sources, sinks;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      if (indeg[i] == 0) sources.push_back(static_cast<int>(i));
      if (outdeg[i] == 0) sinks.push_back(static_cast<int>(i));
    }
    REQUIRE(sources.size() == 1);
    CHECK(g.vertices[sources[0]].p == identity_coset(*sys, c.J));
    REQUIRE(sinks.size() == 1);
    Coset top = coset_of(*sys, c.J, sys->longest(sys->full_set()), GenSet{});
    CHECK(g.vertices[sinks[0]].p == top);
  }
}

TEST_CASE("free coset length doubles the group length") {
  auto sys = System::from_name("A3");
  ComplexGraph g = build_complex(*sys, GenSet{});
  int seen = 0;
  for (const ComplexVertex& v : g.vertices)
    if (v.p.right.empty()) {
      ++seen;
      CHECK(v.length == 2 * sys->length(v.p.min));
    }
  CHECK(seen == 24);
}

TEST_CASE("the embedding into Cox_0 is cell-preserving") {
  for (const char* name : {"A2", "B2"}) {
    auto sys = System::from_name(name);
    uint32_t subsets = UINT32_C(1) << sys->rank();
    for (uint32_t bits = 0; bits < subsets; ++bits) {
      EmbedReport rep = embed_check(*sys, GenSet(bits));
      CHECK(rep.ok());
      CHECK(rep.failures == 0);
    }
  }

  // J = 0 embeds identically.
  auto a3 = System::from_name("A3");
  EmbedReport whole = embed_check(*a3, GenSet{});
  CHECK(whole.ok());
  CHECK(whole.vertices == 75);
  CHECK(whole.edges == 134);

  for (GenSet J : {GenSet{0}, GenSet{0, 1}, GenSet{0, 2}, a3->full_set()}) {
    EmbedReport rep = embed_check(*a3, J);
    CHECK(rep.ok());
  }

  // The S3 instance from the hexagon figure, with its enumerated image size.
  auto a2 = System::from_name("A2");
  EmbedReport rep = embed_check(*a2, GenSet{0});
  CHECK(rep.ok());
  CHECK(rep.vertices == 8);
  CHECK(rep.edges == 9);
  CHECK(rep.cells == 2);

  // The image really is cut out by the left-descent condition.
  ComplexGraph gs = build_complex(*a2, GenSet{0});
  for (const ComplexVertex& v : gs.vertices)
    CHECK(a2->left_descents(v.p.max).contains(0));
}

TEST_CASE("hyperplane criterion for reduced steps") {
  for (const char* name : {"A2", "B2", "A3", "I2(5)"}) {
    auto sys = System::from_name(name);
    HalfspaceReport rep = halfspace_check(*sys);
    CHECK(rep.ok());
    CHECK(rep.failures == 0);
    CHECK(rep.pairs > 0);
  }
  CHECK(halfspace_check(*System::from_name("A2")).pairs == 18);
}

TEST_CASE("DOT export of Cox_0(S3) is pinned byte for byte") {
  auto sys = System::from_name("A2");
  ComplexGraph g = build_complex(*sys, GenSet{});
  const std::string expected = R"(digraph coxcomplex {
  rankdir=BT;
  node [shape=box, fontname="monospace"];
  v0 [label="0:e"];
  v1 [label="s:e"];
  v2 [label="t:e"];
  v3 [label="0:s"];
  v4 [label="0:t"];
  v5 [label="s:t"];
  v6 [label="t:s"];
  v7 [label="st:e"];
  v8 [label="0:ts"];
  v9 [label="0:st"];
  v10 [label="s:st"];
  v11 [label="t:ts"];
  v12 [label="0:sts"];
  { rank=same; v0; }
  { rank=same; v1; v2; }
  { rank=same; v3; v4; }
  { rank=same; v5; v6; v7; }
  { rank=same; v8; v9; }
  { rank=same; v10; v11; }
  { rank=same; v12; }
  v0 -> v1 [label="+s", color="#e41a1c"];
  v0 -> v2 [label="+t", color="#377eb8"];
  v1 -> v3 [label="-s", color="#e41a1c"];
  v1 -> v7 [label="+t", color="#377eb8"];
  v2 -> v4 [label="-t", color="#377eb8"];
  v2 -> v7 [label="+s", color="#e41a1c"];
  v3 -> v6 [label="+t", color="#377eb8"];
  v4 -> v5 [label="+s", color="#e41a1c"];
  v5 -> v8 [label="-s", color="#e41a1c"];
  v6 -> v9 [label="-t", color="#377eb8"];
  v7 -> v10 [label="-t", color="#377eb8"];
  v7 -> v11 [label="-s", color="#e41a1c"];
  v8 -> v11 [label="+t", color="#377eb8"];
  v9 -> v10 [label="+s", color="#e41a1c"];
  v10 -> v12 [label="-s", color="#e41a1c"];
  v11 -> v12 [label="-t", color="#377eb8"];
}
)";
  CHECK(complex_dot(*sys, g) == expected);
  CHECK(export_complex(*sys, g, "dot") == expected);
}

TEST_CASE("JSON export matches the documented schema and is stable") {
  auto sys = System::from_name("A2");
  ComplexGraph g = build_complex(*sys, GenSet{});
  std::string text = complex_json(*sys, g);
  CHECK(text == complex_json(*sys, g));
  CHECK(text == export_complex(*sys, g, "json"));
  CHECK(text.back() == '\n');

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["base"] == "0");
  REQUIRE(j["vertices"].size() == 13);
  REQUIRE(j["edges"].size() == 16);
  REQUIRE(j["two_cells"].size() == 4);
  for (size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& v = j["vertices"][i];
    CHECK(v["id"] == i);
    CHECK(v["right"] == genset_to_string(*sys, g.vertices[i].p.right));
    CHECK(v["min"] == word_to_string(*sys, sys->word(g.vertices[i].p.min)));
    CHECK(v["length"] == g.vertices[i].length);
  }
  CHECK(j["vertices"][12]["min"] == "sts");
  CHECK(j["edges"][0]["step"] == "+s");
  CHECK(j["two_cells"][0]["sides"][0] == nlohmann::json::array({"+s", "+t"}));

  CHECK_THROWS_AS(export_complex(*sys, g, "xml"), std::invalid_argument);
  CHECK_THROWS_AS(export_complex(*sys, g, ""), std::invalid_argument);
}

TEST_CASE("the empty system has the one-vertex complex") {
  System sys(CoxeterMatrix::from_entries({}));
  ComplexGraph g = build_complex(sys, GenSet{});
  REQUIRE(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.two_cells.empty());
  CHECK(g.vertices[0].length == 0);
  CHECK(g.vertices[0].p == identity_coset(sys, GenSet{}));
  CHECK(export_complex(sys, g, "dot").find("v0") != std::string::npos);
  CHECK(nlohmann::json::parse(export_complex(sys, g, "json"))["vertices"].size() == 1);
}

TEST_CASE("vertex bound") {
  auto sys = System::from_name("A2");
  CHECK_THROWS_AS(build_complex(*sys, GenSet{}, 5), std::length_error);
  CHECK_NOTHROW(build_complex(*sys, GenSet{}, 13));
}
