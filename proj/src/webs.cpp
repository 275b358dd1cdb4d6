#include "scox/webs.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace scox {

namespace {

int prefix_before(const std::vector<int>& parts, int pos) {
  return std::accumulate(parts.begin(), parts.begin() + pos, 0);
}

[[noreturn]] void bad_web(const std::string& what) { throw std::invalid_argument("web: " + what); }

} // namespace

ObjectSeq ObjectSeq::of(std::vector<int> parts) {
  ObjectSeq n;
  for (int p : parts) {
    if (p < 0) bad_web("negative strand label " + std::to_string(p));
    if (p > 0) n.parts.push_back(p);
  }
  return n;
}

int ObjectSeq::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

GenSet ObjectSeq::parabolic() const {
  int N = total();
  GenSet J = GenSet::full(std::max(0, N - 1));
  int cut = 0;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    cut += parts[i];
    J = J.minus(cut - 1); // the cut after block i kills generator s_cut
  }
  return J;
}

ObjectSeq object_from_parabolic(int N, GenSet J) {
  if (N < 0) bad_web("negative total");
  if (N > 0 && !GenSet::full(N - 1).contains(J)) bad_web("subset does not fit inside S_N");
  ObjectSeq n;
  if (N == 0) return n;
  int block = 1;
  for (int c = 1; c < N; ++c) {
    if (J.contains(c - 1)) {
      ++block;
    } else {
      n.parts.push_back(block);
      block = 1;
    }
  }
  n.parts.push_back(block);
  return n;
}

std::vector<ObjectSeq> web_slices(const Web& w) {
  std::vector<ObjectSeq> slices;
  slices.reserve(w.layers.size() + 1);
  slices.push_back(w.bottom);
  for (int p : w.bottom.parts)
    if (p <= 0) bad_web("non-positive strand label on the bottom boundary");
  for (size_t i = 0; i < w.layers.size(); ++i) {
    const WebOp& op = w.layers[i];
    std::vector<int> parts = slices.back().parts;
    int k = static_cast<int>(parts.size());
    std::string where = " at layer " + std::to_string(i);
    if (op.a <= 0 || op.b <= 0) bad_web("non-positive vertex label" + where);
    if (op.merge) {
      if (op.pos < 0 || op.pos + 1 >= k) bad_web("merge position out of range" + where);
      if (parts[op.pos] != op.a || parts[op.pos + 1] != op.b)
        bad_web("merge labels disagree with the strands" + where);
      parts[op.pos] = op.a + op.b;
      parts.erase(parts.begin() + op.pos + 1);
    } else {
      if (op.pos < 0 || op.pos >= k) bad_web("split position out of range" + where);
      if (parts[op.pos] != op.a + op.b) bad_web("split labels disagree with the strand" + where);
      parts[op.pos] = op.a;
      parts.insert(parts.begin() + op.pos + 1, op.b);
    }
    slices.push_back(ObjectSeq{std::move(parts)});
  }
  return slices;
}

ObjectSeq Web::top() const { return web_slices(*this).back(); }

Web identity_web(const ObjectSeq& n) { return Web{n, {}}; }

Web then_merge(Web w, int pos) {
  ObjectSeq t = w.top();
  if (pos < 0 || pos + 1 >= t.size()) bad_web("merge position out of range");
  w.layers.push_back(WebOp{true, pos, t.parts[pos], t.parts[pos + 1]});
  return w;
}

Web then_split(Web w, int pos, int a, int b) {
  if (a < 0 || b < 0) bad_web("negative split label");
  if (a == 0 || b == 0) return w; // splitting off a zero strand is the identity
  ObjectSeq t = w.top();
  if (pos < 0 || pos >= t.size()) bad_web("split position out of range");
  if (t.parts[pos] != a + b) bad_web("split labels do not sum to the strand");
  w.layers.push_back(WebOp{false, pos, a, b});
  return w;
}

Web compose(const Web& first, const Web& second) {
  if (first.top() != second.bottom) bad_web("compose: boundaries do not match");
  Web out = first;
  out.layers.insert(out.layers.end(), second.layers.begin(), second.layers.end());
  return out;
}

Web tensor(const Web& left, const Web& right) {
  Web out;
  out.bottom.parts = left.bottom.parts;
  out.bottom.parts.insert(out.bottom.parts.end(), right.bottom.parts.begin(),
                          right.bottom.parts.end());
  out.layers = left.layers;
  int shift = left.top().size();
  for (WebOp op : right.layers) {
    op.pos += shift;
    out.layers.push_back(op);
  }
  return out;
}

int degree(const Web& w) {
  int d = 0;
  for (const WebOp& op : w.layers) d += op.a * op.b;
  return d;
}

std::unique_ptr<System> symmetric_group(int N) {
  if (N < 0) bad_web("negative symmetric group");
  int rank = std::max(0, N - 1);
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 1;
    if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return std::make_unique<System>(CoxeterMatrix::from_entries(m));
}

Expression expression_from_web(const Web& w) {
  std::vector<ObjectSeq> slices = web_slices(w);
  Expression e;
  e.start = w.bottom.parabolic();
  for (size_t i = 0; i < w.layers.size(); ++i) {
    const WebOp& op = w.layers[i];
    int cut = prefix_before(slices[i].parts, op.pos) + op.a;
    e.steps.push_back(Step{op.merge, cut - 1});
  }
  return e;
}

Web web_from_expression(int N, const Expression& e) {
  if (N > 0 && !GenSet::full(N - 1).contains(e.start)) bad_web("expression does not fit in S_N");
  Web w = identity_web(object_from_parabolic(N, e.start));
  std::vector<int> cur = w.bottom.parts;
  for (const Step& st : e.steps) {
    if (st.gen < 0 || st.gen >= N - 1) bad_web("generator out of range for S_N");
    int c = st.gen + 1;
    int k = static_cast<int>(cur.size());
    int prefix = 0, pos = -1;
    for (int i = 0; i < k; ++i) {
      if (st.up ? (prefix + cur[i] == c && i + 1 < k) : (prefix < c && c < prefix + cur[i])) {
        pos = i;
        break;
      }
      prefix += cur[i];
      if (prefix > c) break;
    }
    if (pos < 0)
      bad_web(std::string(st.up ? "up" : "down") + " step does not match a " +
              (st.up ? "cut" : "strand"));
    if (st.up) {
      w.layers.push_back(WebOp{true, pos, cur[pos], cur[pos + 1]});
      cur[pos] += cur[pos + 1];
      cur.erase(cur.begin() + pos + 1);
    } else {
      int a = c - prefix, b = cur[pos] - a;
      w.layers.push_back(WebOp{false, pos, a, b});
      cur[pos] = a;
      cur.insert(cur.begin() + pos + 1, b);
    }
  }
  return w;
}

Coset evaluate_web(const System& sys, const Web& w) {
  int N = w.bottom.total();
  if (sys.rank() != std::max(0, N - 1)) bad_web("system rank does not match the strand total");
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.bond(i, j) != (j == i + 1 ? 3 : 2)) bad_web("system is not a symmetric group");
  return evaluate(sys, expression_from_web(w));
}

const char* web_relation_name(WebRelation r) {
  switch (r) {
  case WebRelation::Bigon: return "bigon";
  case WebRelation::Assoc: return "assoc";
  case WebRelation::Coassoc: return "coassoc";
  case WebRelation::Square1: return "square1";
  case WebRelation::Square2: return "square2";
  case WebRelation::NonRedSquare: return "nonredsquare";
  case WebRelation::RungSwap: return "rungswap";
  case WebRelation::Interchange: return "interchange";
  }
  return "?";
}

WebRelation web_relation_from_name(const std::string& name) {
  for (WebRelation r : {WebRelation::Bigon, WebRelation::Assoc, WebRelation::Coassoc,
                        WebRelation::Square1, WebRelation::Square2, WebRelation::NonRedSquare,
                        WebRelation::RungSwap, WebRelation::Interchange})
    if (name == web_relation_name(r)) return r;
  throw std::invalid_argument(
      "unknown web relation: " + name +
      " (expected bigon, assoc, coassoc, square1, square2, nonredsquare, rungswap or "
      "interchange)");
}

namespace {

// The two reduced shapes a square relation can take, read off four layers.
// Labels follow the merge-split square on strands (a, x) -> (b, y).
struct SquareOne {
  int p, a, b, f, g, xf; // split@p+1 (f,xf); merge@p (a,f); split@p (b,g); merge@p+1 (g,xf)
};
struct SquareTwo {
  int p, c, g, x, f, y; // split@p (c,g); merge@p+1 (g,x); split@p+1 (f,y); merge@p (c,f)
};

bool match_square_one(const std::vector<WebOp>& L, int at, SquareOne& s) {
  if (at < 0 || at + 4 > static_cast<int>(L.size())) return false;
  const WebOp &o1 = L[at], &o2 = L[at + 1], &o3 = L[at + 2], &o4 = L[at + 3];
  if (o1.merge || !o2.merge || o3.merge || !o4.merge) return false;
  int p = o2.pos;
  if (o1.pos != p + 1 || o3.pos != p || o4.pos != p + 1) return false;
  if (o2.b != o1.a || o4.a != o3.b || o4.b != o1.b) return false;
  s = SquareOne{p, o2.a, o3.a, o1.a, o3.b, o1.b};
  return true;
}

bool match_square_two(const std::vector<WebOp>& L, int at, SquareTwo& s) {
  if (at < 0 || at + 4 > static_cast<int>(L.size())) return false;
  const WebOp &o1 = L[at], &o2 = L[at + 1], &o3 = L[at + 2], &o4 = L[at + 3];
  if (o1.merge || !o2.merge || o3.merge || !o4.merge) return false;
  int p = o1.pos;
  if (o2.pos != p + 1 || o3.pos != p + 1 || o4.pos != p) return false;
  if (o2.a != o1.b || o4.a != o1.a || o4.b != o3.a) return false;
  s = SquareTwo{p, o1.a, o1.b, o2.b, o3.a, o3.b};
  return true;
}

} // namespace

std::optional<Web> try_web_relation(const Web& w, WebRelation which, int at) {
  const std::vector<WebOp>& L = w.layers;
  int n = static_cast<int>(L.size());
  auto fail = []() { return std::nullopt; };
  auto have = [&](int k) { return at >= 0 && at + k <= n; };
  // Replace layers [at, at+count) by repl, leaving everything else alone.
  auto splice = [&](int count, std::vector<WebOp> repl) {
    Web out;
    out.bottom = w.bottom;
    out.layers.reserve(L.size() - count + repl.size());
    out.layers.insert(out.layers.end(), L.begin(), L.begin() + at);
    out.layers.insert(out.layers.end(), repl.begin(), repl.end());
    out.layers.insert(out.layers.end(), L.begin() + at + count, L.end());
    return out;
  };

  switch (which) {
  case WebRelation::Bigon: {
    if (!have(2)) return fail();
    const WebOp &o1 = L[at], &o2 = L[at + 1];
    if (o1.merge || !o2.merge || o2.pos != o1.pos || o2.a != o1.a || o2.b != o1.b) return fail();
    return splice(2, {});
  }

  case WebRelation::Assoc: {
    if (!have(2)) return fail();
    const WebOp &o1 = L[at], &o2 = L[at + 1];
    if (!o1.merge || !o2.merge) return fail();
    if (o2.pos == o1.pos && o2.a == o1.a + o1.b) { // ((ab)c) -> (a(bc))
      int a = o1.a, b = o1.b, c = o2.b;
      return splice(2, {WebOp{true, o1.pos + 1, b, c}, WebOp{true, o1.pos, a, b + c}});
    }
    if (o2.pos == o1.pos - 1 && o2.b == o1.a + o1.b) { // (a(bc)) -> ((ab)c)
      int a = o2.a, b = o1.a, c = o1.b;
      return splice(2, {WebOp{true, o2.pos, a, b}, WebOp{true, o2.pos, a + b, c}});
    }
    return fail();
  }

  case WebRelation::Coassoc: {
    if (!have(2)) return fail();
    const WebOp &o1 = L[at], &o2 = L[at + 1];
    if (o1.merge || o2.merge) return fail();
    if (o2.pos == o1.pos && o1.a == o2.a + o2.b) { // ((ab)c) -> (a(bc))
      int a = o2.a, b = o2.b, c = o1.b;
      return splice(2, {WebOp{false, o1.pos, a, b + c}, WebOp{false, o1.pos + 1, b, c}});
    }
    if (o2.pos == o1.pos + 1 && o1.b == o2.a + o2.b) { // (a(bc)) -> ((ab)c)
      int a = o1.a, b = o2.a, c = o2.b;
      return splice(2, {WebOp{false, o1.pos, a + b, c}, WebOp{false, o1.pos, a, b}});
    }
    return fail();
  }

  case WebRelation::Square1: {
    if (have(2) && L[at].merge && !L[at + 1].merge && L[at + 1].pos == L[at].pos) {
      int p = L[at].pos, a = L[at].a, x = L[at].b, b = L[at + 1].a;
      if (b >= x) return fail(); // needs a+b < a+x on the two strands
      return splice(2, {WebOp{false, p + 1, b, x - b}, WebOp{true, p, a, b},
                        WebOp{false, p, b, a}, WebOp{true, p + 1, a, x - b}});
    }
    SquareOne s;
    if (match_square_one(L, at, s) && s.f == s.b) // then g == a and the square closes
      return splice(4, {WebOp{true, s.p, s.a, s.f + s.xf}, WebOp{false, s.p, s.b, s.g + s.xf}});
    return fail();
  }

  case WebRelation::Square2: {
    if (have(2) && L[at].merge && !L[at + 1].merge && L[at + 1].pos == L[at].pos) {
      int p = L[at].pos, a = L[at].a, x = L[at].b, b = L[at + 1].a, y = L[at + 1].b;
      if (b <= x) return fail(); // needs a+b > a+x on the two strands
      return splice(2, {WebOp{false, p, a - y, y}, WebOp{true, p + 1, y, x},
                        WebOp{false, p + 1, x, y}, WebOp{true, p, a - y, x}});
    }
    SquareTwo s;
    if (match_square_two(L, at, s) && s.f == s.x) // the crossing-cut square, g == y
      return splice(4, {WebOp{true, s.p, s.c + s.g, s.x}, WebOp{false, s.p, s.c + s.f, s.y}});
    return fail();
  }

  case WebRelation::NonRedSquare: {
    SquareOne s;
    if (match_square_one(L, at, s) && s.f > s.b)
      return splice(4, {WebOp{true, s.p, s.a, s.f + s.xf}, WebOp{false, s.p, s.b, s.g + s.xf}});
    return fail();
  }

  case WebRelation::RungSwap: {
    SquareOne s1;
    if (match_square_one(L, at, s1) && s1.f < s1.b) { // g < a, so the other shape is drawable
      int x = s1.f + s1.xf, y = s1.g + s1.xf;
      return splice(4, {WebOp{false, s1.p, s1.a - s1.g, s1.g}, WebOp{true, s1.p + 1, s1.g, x},
                        WebOp{false, s1.p + 1, s1.f, y}, WebOp{true, s1.p, s1.a - s1.g, s1.f}});
    }
    SquareTwo s2;
    if (match_square_two(L, at, s2) && s2.f < s2.x) { // f == x would be square2 instead
      int a = s2.c + s2.g, b = s2.c + s2.f;
      return splice(4, {WebOp{false, s2.p + 1, s2.f, s2.x - s2.f}, WebOp{true, s2.p, a, s2.f},
                        WebOp{false, s2.p, b, s2.g}, WebOp{true, s2.p + 1, s2.g, s2.x - s2.f}});
    }
    return fail();
  }

  case WebRelation::Interchange: {
    if (!have(2)) return fail();
    const WebOp &o1 = L[at], &o2 = L[at + 1];
    int post1b = o1.pos, post1e = o1.pos + (o1.merge ? 1 : 2);
    int pre2b = o2.pos, pre2e = o2.pos + (o2.merge ? 2 : 1);
    int d1 = o1.merge ? -1 : 1, d2 = o2.merge ? -1 : 1;
    if (pre2e <= post1b) // o2 acts strictly left of o1
      return splice(2, {WebOp{o2.merge, o2.pos, o2.a, o2.b}, WebOp{o1.merge, o1.pos + d2, o1.a, o1.b}});
    if (pre2b >= post1e) // strictly right
      return splice(2, {WebOp{o2.merge, o2.pos - d1, o2.a, o2.b}, WebOp{o1.merge, o1.pos, o1.a, o1.b}});
    return fail();
  }
  }
  return fail();
}

Web apply_web_relation(const Web& w, WebRelation which, int at) {
  std::optional<Web> out = try_web_relation(w, which, at);
  if (!out)
    throw std::invalid_argument(std::string("web relation ") + web_relation_name(which) +
                                " does not match at layer " + std::to_string(at));
  return *std::move(out);
}

std::uint64_t hom_count(const ObjectSeq& n, const ObjectSeq& m) {
  if (n.total() != m.total()) return 0;
  int N = n.total();
  if (N > 8) throw std::length_error("hom_count: S_" + std::to_string(N) + " is too large to enumerate");
  auto sys = symmetric_group(N);
  GenSet Jn = n.parabolic(), Jm = m.parabolic();
  std::set<Coset> seen;
  for (const Element& w : quotient_reps(*sys, sys->full_set(), GenSet{}))
    seen.insert(coset_of(*sys, Jn, w, Jm));
  return seen.size();
}

std::string web_to_text(const Web& w) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < w.bottom.size(); ++i) out << (i ? "," : "") << w.bottom.parts[i];
  out << ')';
  for (const WebOp& op : w.layers)
    out << " ; " << (op.merge ? "merge" : "split") << '@' << op.pos + 1 << '(' << op.a << ','
        << op.b << ')';
  return out.str();
}

namespace {

// Strict scanning of a whitespace-stripped token stream.
struct Scan {
  std::string s;
  size_t i = 0;

  bool eat(char c) {
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) bad_web(std::string("text: expected '") + c + "' in \"" + s + "\"");
  }
  bool lit(const std::string& word) {
    if (s.compare(i, word.size(), word) == 0) { i += word.size(); return true; }
    return false;
  }
  int number() {
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) bad_web("text: expected a number in \"" + s + "\"");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }
};

} // namespace

Web web_from_text(const std::string& text) {
  Scan sc;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) sc.s.push_back(c);
  Web w;
  sc.expect('(');
  if (!sc.eat(')')) {
    do w.bottom.parts.push_back(sc.number());
    while (sc.eat(','));
    sc.expect(')');
  }
  w.bottom = ObjectSeq::of(w.bottom.parts);
  while (sc.eat(';')) {
    WebOp op;
    if (sc.lit("merge")) op.merge = true;
    else if (sc.lit("split")) op.merge = false;
    else bad_web("text: expected merge or split in \"" + sc.s + "\"");
    sc.expect('@');
    op.pos = sc.number() - 1;
    sc.expect('(');
    op.a = sc.number();
    sc.expect(',');
    op.b = sc.number();
    sc.expect(')');
    w.layers.push_back(op);
  }
  if (sc.i != sc.s.size()) bad_web("text: trailing junk in \"" + sc.s + "\"");
  web_slices(w); // full validation
  return w;
}

std::string web_to_json(const Web& w) {
  nlohmann::json out;
  out["bottom"] = w.bottom.parts;
  out["layers"] = nlohmann::json::array();
  for (const WebOp& op : w.layers)
    out["layers"].push_back({{"op", op.merge ? "merge" : "split"},
                             {"at", op.pos + 1},
                             {"a", op.a},
                             {"b", op.b}});
  return out.dump(2) + "\n";
}

Web web_from_json(const std::string& text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    bad_web(std::string("json: ") + err.what());
  }
  Web w;
  try {
    w.bottom = ObjectSeq::of(in.at("bottom").get<std::vector<int>>());
    for (const auto& layer : in.value("layers", nlohmann::json::array())) {
      std::string op = layer.at("op").get<std::string>();
      if (op != "merge" && op != "split") bad_web("json: op must be merge or split");
      w.layers.push_back(WebOp{op == "merge", layer.at("at").get<int>() - 1,
                               layer.at("a").get<int>(), layer.at("b").get<int>()});
    }
  } catch (const nlohmann::json::exception& err) {
    bad_web(std::string("json: ") + err.what());
  }
  web_slices(w);
  return w;
}

} // namespace scox
