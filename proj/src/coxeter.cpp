// Coxeter matrices, finite-type classification, and the root-permutation
// element engine. See include/scox/coxeter.h for the representation notes.

#include "scox/coxeter.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace scox {

// ============================================================== matrices

CoxeterMatrix CoxeterMatrix::from_entries(const std::vector<std::vector<int>>& entries) {
  CoxeterMatrix mat;
  mat.rank = static_cast<int>(entries.size());
  if (mat.rank > 32) throw std::domain_error("rank capped at 32 generators");
  mat.m = entries;
  for (int i = 0; i < mat.rank; ++i) {
    if (static_cast<int>(entries[i].size()) != mat.rank)
      throw std::domain_error("Coxeter matrix must be square");
    if (entries[i][i] != 1) throw std::domain_error("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < mat.rank; ++j) {
      if (entries[i][j] != entries[j][i])
        throw std::domain_error("Coxeter matrix must be symmetric");
      if (i != j && entries[i][j] != infinite_bond && entries[i][j] < 2)
        throw std::domain_error("off-diagonal entries must be >= 2 (or 0 for infinity)");
    }
  }
  return mat;
}

// ============================================================== classification

namespace {

long long positive_root_count(char family, int rank, int m) {
  switch (family) {
  case 'A': return static_cast<long long>(rank) * (rank + 1) / 2;
  case 'B': return static_cast<long long>(rank) * rank;
  case 'D': return static_cast<long long>(rank) * (rank - 1);
  case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  case 'F': return 24;
  case 'G': return 6;
  case 'H': return rank == 3 ? 15 : 60;
  case 'I': return m;
  }
  return 0;
}

std::string type_name(char family, int rank, int m) {
  std::ostringstream os;
  if (family == 'I')
    os << "I2(" << m << ")";
  else
    os << family << rank;
  return os.str();
}

// Classify one connected component, filling name / finiteness / node order.
// `nodes` arrives in ascending index order and is rewritten into canonical
// diagram order when the component is finite.
void classify_component(const CoxeterMatrix& mat, TypeComponent& comp) {
  std::vector<int>& nodes = comp.nodes;
  const int r = static_cast<int>(nodes.size());
  comp.finite = false;
  comp.name = "infinite";

  auto bond = [&](int a, int b) { return mat.m[a][b]; };
  auto finish = [&](char family, int m = 0) {
    comp.finite = true;
    comp.name = type_name(family, r, m);
    comp.positive_roots = positive_root_count(family, r, m);
  };

  for (int a : nodes)
    for (int b : nodes)
      if (a < b && bond(a, b) == infinite_bond) return;

  if (r == 1) { finish('A'); return; }
  if (r == 2) {
    int m = bond(nodes[0], nodes[1]);
    if (m == 3) finish('A');
    else if (m == 4) finish('B');
    else if (m == 6) finish('G');
    else finish('I', m);
    return;
  }

  // Rank >= 3. Collect edges and degrees.
  std::vector<std::pair<int, int>> edges; // indices into `nodes`
  std::vector<int> degree(r, 0);
  int big_bonds = 0, bond45 = 2; // bond45: the single 4 or 5 label, if any
  int big_edge = -1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int m = bond(nodes[i], nodes[j]);
      if (m == 2) continue;
      if (m >= 6) return; // no finite type of rank >= 3 carries a bond >= 6
      if (m >= 4) { ++big_bonds; bond45 = m; big_edge = static_cast<int>(edges.size()); }
      edges.emplace_back(i, j);
      ++degree[i];
      ++degree[j];
    }
  if (big_bonds > 1) return;
  if (static_cast<int>(edges.size()) != r - 1) return; // must be a tree (it is connected)

  int deg3 = -1;
  for (int i = 0; i < r; ++i) {
    if (degree[i] > 3) return;
    if (degree[i] == 3) {
      if (deg3 >= 0) return;
      deg3 = i;
    }
  }

  std::vector<std::vector<int>> adj(r);
  for (auto [i, j] : edges) { adj[i].push_back(j); adj[j].push_back(i); }

  // Walk a path from `from` (excluding it) starting toward `next`.
  auto walk = [&](int from, int next) {
    std::vector<int> path{next};
    int prev = from, cur = next;
    while (true) {
      int fwd = -1;
      for (int nb : adj[cur])
        if (nb != prev) { fwd = nb; break; }
      if (fwd < 0) break;
      path.push_back(fwd);
      prev = cur;
      cur = fwd;
    }
    return path;
  };

  auto reorder = [&](const std::vector<int>& order) {
    std::vector<int> out;
    out.reserve(order.size());
    for (int i : order) out.push_back(nodes[i]);
    nodes = out;
  };

  if (deg3 >= 0) {
    if (big_bonds > 0) return; // branch plus labeled bond: not finite
    std::vector<std::vector<int>> arms;
    for (int nb : adj[deg3]) arms.push_back(walk(deg3, nb));
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    if (a == 1 && b == 1) {
      // D_r: two short leaves, branch node, then the long arm.
      std::vector<int> order{arms[0][0], arms[1][0], deg3};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
      reorder(order);
      finish('D');
      return;
    }
    if (a == 1 && b == 2 && c >= 2 && c <= 4) {
      // E6/E7/E8 in the paper's numbering: 1 and 3 on the length-2 arm,
      // 2 on the short arm, 4 the branch node, 5.. along the long arm.
      std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], deg3};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
      reorder(order);
      finish('E');
      return;
    }
    return;
  }

  // A path. Find its endpoints.
  std::vector<int> ends;
  for (int i = 0; i < r; ++i)
    if (degree[i] == 1) ends.push_back(i);
  assert(ends.size() == 2);

  if (big_bonds == 0) {
    int start = nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1];
    std::vector<int> order{start};
    auto rest = walk(start, adj[start][0]);
    order.insert(order.end(), rest.begin(), rest.end());
    reorder(order);
    finish('A');
    return;
  }

  auto [ei, ej] = edges[big_edge];
  bool terminal_i = degree[ei] == 1, terminal_j = degree[ej] == 1;
  if (bond45 == 4) {
    if (terminal_i || terminal_j) {
      // B_r, numbered from the 4-bond leaf inward.
      int start = terminal_i ? ei : ej;
      std::vector<int> order{start};
      auto rest = walk(start, adj[start][0]);
      order.insert(order.end(), rest.begin(), rest.end());
      reorder(order);
      finish('B');
      return;
    }
    if (r == 4) {
      // F4: the 4-bond is the central edge of a 4-chain.
      int start = nodes[ends[0]] < nodes[ends[1]] ? ends[0] : ends[1];
      std::vector<int> order{start};
      auto rest = walk(start, adj[start][0]);
      order.insert(order.end(), rest.begin(), rest.end());
      reorder(order);
      finish('F');
      return;
    }
    return;
  }

  // bond45 == 5: H3/H4, 5-bond terminal, numbered from the far leaf.
  if (!(terminal_i || terminal_j) || r > 4) return;
  int five_leaf = terminal_i ? ei : ej;
  int start = ends[0] == five_leaf ? ends[1] : ends[0];
  std::vector<int> order{start};
  auto rest = walk(start, adj[start][0]);
  order.insert(order.end(), rest.begin(), rest.end());
  reorder(order);
  finish('H');
}

} // namespace

Classification classify(const CoxeterMatrix& mat, GenSet subset) {
  Classification cl;
  cl.finite = true;
  std::vector<bool> seen(mat.rank, false);
  for (int s = 0; s < mat.rank; ++s) {
    if (!subset.contains(s) || seen[s]) continue;
    // BFS the connected component of s within subset.
    std::vector<int> nodes;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      nodes.push_back(a);
      for (int b = 0; b < mat.rank; ++b)
        if (subset.contains(b) && !seen[b] && a != b && mat.m[a][b] != 2) {
          seen[b] = true;
          q.push(b);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    TypeComponent comp;
    comp.nodes = nodes;
    classify_component(mat, comp);
    cl.finite = cl.finite && comp.finite;
    cl.components.push_back(std::move(comp));
  }
  return cl;
}

std::string Classification::name() const {
  if (!finite) return "infinite";
  if (components.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) out += "x";
    out += components[i].name;
  }
  return out;
}

// ============================================================== named systems

namespace {

void put_bond(std::vector<std::vector<int>>& m, int i, int j, int v) {
  m[i][j] = v;
  m[j][i] = v;
}

// Append the canonical diagram of one irreducible factor at offset `off`.
void emit_factor(std::vector<std::vector<int>>& m, int off, char family, int rank, int ibond) {
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) put_bond(m, off + i, off + i + 1, 3);
  };
  switch (family) {
  case 'A': chain(0, rank - 1); break;
  case 'B':
    put_bond(m, off + 0, off + 1, 4);
    chain(1, rank - 1);
    break;
  case 'D':
    put_bond(m, off + 0, off + 2, 3);
    put_bond(m, off + 1, off + 2, 3);
    chain(2, rank - 1);
    break;
  case 'E':
    put_bond(m, off + 0, off + 2, 3);
    put_bond(m, off + 1, off + 3, 3);
    chain(2, rank - 1);
    break;
  case 'F':
    put_bond(m, off + 0, off + 1, 3);
    put_bond(m, off + 1, off + 2, 4);
    put_bond(m, off + 2, off + 3, 3);
    break;
  case 'G': put_bond(m, off + 0, off + 1, 6); break;
  case 'H':
    chain(0, rank - 2);
    put_bond(m, off + rank - 2, off + rank - 1, 5);
    break;
  case 'I': put_bond(m, off + 0, off + 1, ibond); break;
  }
}

struct Factor {
  char family;
  int rank;
  int ibond;
};

Factor parse_factor(const std::string& tok) {
  if (tok.size() < 2) throw std::domain_error("cannot parse type name: " + tok);
  char fam = static_cast<char>(std::toupper(tok[0]));
  if (fam == 'I') {
    // I2(m)
    size_t open = tok.find('(');
    size_t close = tok.find(')');
    if (tok.substr(1, open - 1) != "2" || open == std::string::npos || close == std::string::npos)
      throw std::domain_error("cannot parse dihedral type: " + tok);
    int m = std::stoi(tok.substr(open + 1, close - open - 1));
    if (m < 2) throw std::domain_error("dihedral bond must be >= 2");
    return {'I', 2, m};
  }
  int rank = std::stoi(tok.substr(1));
  auto ok = [&] {
    switch (fam) {
    case 'A': return rank >= 1;
    case 'B': case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    case 'H': return rank == 3 || rank == 4;
    }
    return false;
  }();
  if (!ok) throw std::domain_error("unsupported type name: " + tok);
  if (fam == 'C') fam = 'B';
  return {fam, rank, 0};
}

} // namespace

std::unique_ptr<System> System::from_name(const std::string& name) {
  // Split on 'x' / 'X' / UTF-8 '×'.
  std::vector<std::string> toks;
  std::string cur;
  for (size_t i = 0; i < name.size(); ++i) {
    unsigned char c = name[i];
    if (c == 'x' || c == 'X') {
      toks.push_back(cur);
      cur.clear();
    } else if (c == 0xC3 && i + 1 < name.size() && static_cast<unsigned char>(name[i + 1]) == 0x97) {
      toks.push_back(cur);
      cur.clear();
      ++i;
    } else if (!std::isspace(c)) {
      cur += static_cast<char>(c);
    }
  }
  toks.push_back(cur);

  std::vector<Factor> factors;
  int rank = 0;
  for (const auto& t : toks) {
    if (t.empty()) throw std::domain_error("empty factor in type name: " + name);
    factors.push_back(parse_factor(t));
    rank += factors.back().rank;
  }
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  int off = 0;
  for (const auto& f : factors) {
    emit_factor(m, off, f.family, f.rank, f.ibond);
    off += f.rank;
  }
  return std::make_unique<System>(CoxeterMatrix::from_entries(m));
}

// ============================================================== engine build

namespace {

constexpr int32_t enc(int index, bool negative) {
  return negative ? -(index + 1) : (index + 1);
}

// Root data of one component, in global indices.
struct ComponentRoots {
  std::vector<int> root_ids;                  // global root index per local root
  std::vector<std::vector<int32_t>> gen_imgs; // per local generator: local signed images
  std::vector<GenSet> supports;               // per local root
  std::vector<std::pair<int, int>> parents;   // (local parent root, local gen); -1 for simples
};

// Coordinate construction: BFS closure of the simple roots under the
// reflection action v_i <- v_i - sum_j C[i][j] v_j.
ComponentRoots build_coordinate_roots(const CoxeterMatrix& mat, const std::vector<int>& nodes,
                                      long long expected) {
  const int k = static_cast<int>(nodes.size());
  std::vector<std::vector<Zphi>> C(k, std::vector<Zphi>(k, Zphi(0)));
  for (int i = 0; i < k; ++i) C[i][i] = Zphi(2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      switch (mat.m[nodes[i]][nodes[j]]) {
      case 2: break;
      case 3: C[i][j] = C[j][i] = Zphi(-1); break;
      case 4: C[i][j] = Zphi(-1); C[j][i] = Zphi(-2); break;
      case 6: C[i][j] = Zphi(-1); C[j][i] = Zphi(-3); break;
      case 5: C[i][j] = C[j][i] = Zphi(0, -1); break; // -phi
      default: throw std::logic_error("coordinate engine asked for unsupported bond");
      }
    }

  using Root = std::vector<Zphi>;
  struct RootHash {
    size_t operator()(const Root& v) const {
      size_t h = v.size();
      for (auto z : v) h ^= ZphiHash()(z) + 0x9e3779b9u + (h << 6) + (h >> 2);
      return h;
    }
  };

  std::vector<Root> roots;
  std::unordered_map<Root, int, RootHash> index;
  ComponentRoots out;
  for (int i = 0; i < k; ++i) {
    Root a(k, Zphi(0));
    a[i] = Zphi(1);
    index[a] = i;
    roots.push_back(std::move(a));
    out.parents.emplace_back(-1, -1);
  }

  out.gen_imgs.assign(k, {});
  size_t done = 0;
  while (done < roots.size()) {
    if (roots.size() > 100000) throw std::logic_error("root closure diverged");
    Root v = roots[done];
    for (int i = 0; i < k; ++i) {
      int32_t img;
      if (static_cast<int>(done) == i) {
        img = enc(i, true); // s_i(alpha_i) = -alpha_i
      } else {
        Root w = v;
        Zphi acc(0);
        for (int j = 0; j < k; ++j) acc = acc + C[i][j] * v[j];
        w[i] = w[i] - acc;
        auto it = index.find(w);
        int target;
        if (it == index.end()) {
          target = static_cast<int>(roots.size());
          index[w] = target;
          roots.push_back(w);
          out.parents.emplace_back(static_cast<int>(done), i);
        } else {
          target = it->second;
        }
        img = enc(target, false);
      }
      if (out.gen_imgs[i].size() <= done) out.gen_imgs[i].resize(done + 1);
      out.gen_imgs[i][done] = img;
    }
    ++done;
  }

  if (static_cast<long long>(roots.size()) != expected)
    throw std::logic_error("root count mismatch against classified type");

  for (auto& gi : out.gen_imgs) gi.resize(roots.size());
  out.supports.reserve(roots.size());
  for (const auto& v : roots) {
    GenSet supp;
    for (int i = 0; i < k; ++i)
      if (!v[i].is_zero()) supp.add(nodes[i]);
    out.supports.push_back(supp);
  }
  return out;
}

// Dihedral construction for I2(m). The natural picture puts the positive
// roots on a circle, beta_0..beta_{m-1}, with beta_0 = alpha_s and
// beta_{m-1} = alpha_t; the callers however expect the two simple roots in
// local slots 0 and 1, so we relabel: local 0 = beta_0, local 1 =
// beta_{m-1}, local j (j >= 2) = beta_{j-1}.
ComponentRoots build_dihedral_roots(const std::vector<int>& nodes, int m) {
  auto local_of = [m](int c) { return c == 0 ? 0 : c == m - 1 ? 1 : c + 1; };
  auto circle_of = [m](int l) { return l == 0 ? 0 : l == 1 ? m - 1 : l - 1; };

  ComponentRoots out;
  out.gen_imgs.assign(2, std::vector<int32_t>(m));
  out.supports.resize(m);
  out.parents.assign(m, {-1, -1});
  for (int l = 0; l < m; ++l) {
    int c = circle_of(l);
    // s: beta_0 -> -beta_0, beta_c -> beta_{-c mod m}
    out.gen_imgs[0][l] =
        c == 0 ? enc(0, true) : enc(local_of((m - c) % m), false);
    // t: beta_{m-1} -> -beta_{m-1}, beta_c -> beta_{m-2-c mod m}
    out.gen_imgs[1][l] =
        c == m - 1 ? enc(1, true) : enc(local_of((m - 2 - c + m) % m), false);
    GenSet supp;
    if (c == 0) supp.add(nodes[0]);
    else if (c == m - 1) supp.add(nodes[1]);
    else { supp.add(nodes[0]); supp.add(nodes[1]); }
    out.supports[l] = supp;
  }
  // Reflection parents: BFS from the simple roots along generator images.
  {
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[0] = 0;
    q.push(0);
    if (m > 1) { dist[1] = 0; q.push(1); }
    while (!q.empty()) {
      int r = q.front();
      q.pop();
      for (int g = 0; g < 2; ++g) {
        int32_t im = out.gen_imgs[g][r];
        if (im < 0) continue;
        int tgt = im - 1;
        if (dist[tgt] < 0) {
          dist[tgt] = dist[r] + 1;
          out.parents[tgt] = {r, g};
          q.push(tgt);
        }
      }
    }
  }
  return out;
}

} // namespace

System::System(CoxeterMatrix mat, std::vector<std::string> labels)
    : d_mat(std::move(mat)), d_labels(std::move(labels)) {
  if (d_labels.empty()) {
    for (int i = 0; i < d_mat.rank; ++i) d_labels.push_back("s" + std::to_string(i + 1));
  }
  if (static_cast<int>(d_labels.size()) != d_mat.rank)
    throw std::domain_error("label count must match rank");
  d_type = classify(d_mat, GenSet::full(d_mat.rank));
  if (!d_type.finite)
    throw std::domain_error("not a finite-type Coxeter matrix: " + d_type.name());
  build_engine();
}

void System::build_engine() {
  const int n = rank();

  // Per-component root data, then glue into a global indexing: the first
  // n global roots are the simple roots, later ones follow per component.
  long long total = 0;
  for (const auto& c : d_type.components) total += c.positive_roots;
  d_num_roots = static_cast<int>(total);
  d_root_support.assign(d_num_roots, GenSet());

  std::vector<std::vector<int32_t>> gen_img(n, std::vector<int32_t>(d_num_roots));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < d_num_roots; ++r) gen_img[s][r] = enc(r, false);

  std::vector<std::pair<int, int>> parent(d_num_roots, {-1, -1}); // (global root, gen)
  int next_free = n;
  for (const auto& comp : d_type.components) {
    bool coords = true;
    for (size_t i = 0; i < comp.nodes.size() && coords; ++i)
      for (size_t j = i + 1; j < comp.nodes.size(); ++j) {
        int m = d_mat.m[comp.nodes[i]][comp.nodes[j]];
        if (m != 2 && m != 3 && m != 4 && m != 5 && m != 6) { coords = false; break; }
      }
    ComponentRoots cr;
    if (coords)
      cr = build_coordinate_roots(d_mat, comp.nodes, comp.positive_roots);
    else
      cr = build_dihedral_roots(comp.nodes, d_mat.m[comp.nodes[0]][comp.nodes[1]]);

    const int k = static_cast<int>(comp.nodes.size());
    const int local_count = static_cast<int>(cr.supports.size());
    // local root -> global root. Locals 0..k-1 are the simple roots.
    std::vector<int> glob(local_count);
    for (int i = 0; i < local_count; ++i)
      glob[i] = i < k ? comp.nodes[i] : next_free++;

    for (int i = 0; i < local_count; ++i) {
      d_root_support[glob[i]] = cr.supports[i];
      if (cr.parents[i].first >= 0)
        parent[glob[i]] = {glob[cr.parents[i].first], comp.nodes[cr.parents[i].second]};
    }
    for (int g = 0; g < k; ++g) {
      int s = comp.nodes[g];
      for (int i = 0; i < local_count; ++i) {
        int32_t im = cr.gen_imgs[g][i];
        int tgt = glob[std::abs(im) - 1];
        gen_img[s][glob[i]] = enc(tgt, im < 0);
      }
    }
  }
  assert(next_free == d_num_roots);

  std::vector<int32_t> id(d_num_roots);
  for (int r = 0; r < d_num_roots; ++r) id[r] = enc(r, false);
  d_identity = Element(std::move(id));
  d_gen.clear();
  for (int s = 0; s < n; ++s) d_gen.emplace_back(gen_img[s]);

  // Reflections: t_{alpha_s} = s; otherwise t_{g(beta)} = g t_beta g.
  d_reflections.assign(d_num_roots, Element());
  std::vector<bool> haveref(d_num_roots, false);
  for (int s = 0; s < n; ++s) { d_reflections[s] = d_gen[s]; haveref[s] = true; }
  // Parents always point toward simples, so a few passes settle everything.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = n; r < d_num_roots; ++r) {
      if (haveref[r]) continue;
      auto [pr, g] = parent[r];
      if (pr < 0 || !haveref[pr]) continue;
      d_reflections[r] = mul(mul(d_gen[g], d_reflections[pr]), d_gen[g]);
      haveref[r] = true;
      progress = true;
    }
  }
  for (int r = 0; r < d_num_roots; ++r) {
    assert(haveref[r]);
    (void)haveref;
  }
}

// ============================================================== element ops

Element System::mul(const Element& x, const Element& y) const {
  std::vector<int32_t> img(d_num_roots);
  for (int r = 0; r < d_num_roots; ++r) {
    int32_t e = y[r];
    int32_t f = x[std::abs(e) - 1];
    img[r] = e < 0 ? -f : f;
  }
  return Element(std::move(img));
}

Element System::inverse(const Element& x) const {
  std::vector<int32_t> img(d_num_roots);
  for (int r = 0; r < d_num_roots; ++r) {
    int32_t e = x[r];
    img[std::abs(e) - 1] = e < 0 ? -(r + 1) : (r + 1);
  }
  return Element(std::move(img));
}

int System::length(const Element& x) const {
  int len = 0;
  for (int r = 0; r < d_num_roots; ++r)
    if (x[r] < 0) ++len;
  return len;
}

GenSet System::right_descents(const Element& x) const {
  GenSet out;
  for (int s = 0; s < rank(); ++s)
    if (x[s] < 0) out.add(s);
  return out;
}

GenSet System::left_descents(const Element& x) const {
  GenSet out;
  for (int r = 0; r < d_num_roots; ++r) {
    int32_t e = x[r];
    if (e < 0 && -e <= rank()) out.add(-e - 1);
  }
  return out;
}

int32_t System::root_image(const Element& x, int32_t signed_root) const {
  int32_t f = x[std::abs(signed_root) - 1];
  return signed_root < 0 ? -f : f;
}

const Element& System::longest(GenSet I) const {
  std::lock_guard<std::mutex> lock(d_cache_mutex);
  auto it = d_longest_cache.find(I.bits());
  if (it != d_longest_cache.end()) return it->second;
  Element x = d_identity;
  bool more = true;
  while (more) {
    more = false;
    for (int s : I.elements()) {
      if (x[s] >= 0) { // s not a right descent: go up
        x = mul(x, s);
        more = true;
        break;
      }
    }
  }
  return d_longest_cache.emplace(I.bits(), std::move(x)).first->second;
}

Element System::star(const Element& x, int s) const {
  return x[s] < 0 ? x : mul(x, s);
}

Element System::star(const Element& x, const Element& y) const {
  Element out = x;
  for (int s : word(y)) out = star(out, s);
  return out;
}

std::vector<int> System::word(const Element& x) const {
  std::vector<int> w;
  Element cur = x;
  while (true) {
    GenSet ld = left_descents(cur);
    if (ld.empty()) break;
    int s = ld.first();
    w.push_back(s);
    cur = lmul(s, cur);
  }
  return w;
}

Element System::from_word(const std::vector<int>& w) const {
  Element x = d_identity;
  for (int s : w) x = mul(x, s);
  return x;
}

bool System::bruhat_leq(const Element& x, const Element& y) const {
  if (length(x) > length(y)) return false;
  Element v = x;
  std::vector<int> wy = word(y);
  for (auto it = wy.rbegin(); it != wy.rend(); ++it) {
    if (v[*it] < 0) v = mul(v, *it); // strip when s is a right descent
  }
  return is_identity(v);
}

int System::as_simple(const Element& w) const {
  if (length(w) != 1) return -1;
  for (int s = 0; s < rank(); ++s)
    if (w[s] < 0) return s;
  return -1;
}

int System::generator_by_label(const std::string& lbl) const {
  for (int s = 0; s < rank(); ++s)
    if (d_labels[s] == lbl) return s;
  return -1;
}

} // namespace scox
