#include "scox/relations.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace scox {

const char* relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::StarQuadratic: return "quadratic";
    case RelationKind::UpUp: return "up-up";
    case RelationKind::DownDown: return "down-down";
    case RelationKind::Switchback: return "switchback";
  }
  return "?";
}

namespace {

// Conjugate the simple reflection a by the longest element of I; the result
// is again simple whenever a lies in I.
int conj_by_longest(const System& sys, GenSet I, int a) {
  const Element& w = sys.longest(I);
  int r = sys.as_simple(sys.mul(sys.mul(w, sys.generator(a)), w));
  if (r < 0) throw std::logic_error("conjugate of a simple reflection is not simple");
  return r;
}

// Rotation sequences depend only on the Coxeter matrix, so the cache key
// carries the matrix entries verbatim; no aliasing across systems.
using RotKey = std::tuple<std::vector<std::vector<int>>, uint32_t, int, int>;
std::map<RotKey, RotationSequence> rot_cache;            // guarded by rot_mutex
std::mutex rot_mutex;

// The alternating expression [I_0, L_1, I_1, ..., L_k, I_k] for the first k
// pairs of the u-sequence, as single steps -u_j, +u_{j-1}.
Expression alternating_prefix(GenSet J, const RotationSequence& rs, int k) {
  Expression e;
  e.start = J;
  for (int j = 1; j <= k; ++j) {
    e.steps.push_back({false, rs.at(j)});
    e.steps.push_back({true, rs.at(j - 1)});
  }
  return e;
}

} // namespace

RotationSequence rotation_sequence(const System& sys, GenSet J, int s, int t) {
  if (s < 0 || s >= sys.rank() || J.contains(s))
    throw std::invalid_argument("rotation sequence needs s outside J");
  GenSet Js = J.plus(s);
  if (t < 0 || t >= sys.rank() || !Js.contains(t))
    throw std::invalid_argument("rotation sequence needs t inside Js");
  if (!sys.is_finitary(Js))
    throw std::invalid_argument("rotation sequence needs Js finitary");
  if (conj_by_longest(sys, Js, t) == s)
    throw NoRotationError("s = w_{Js} t w_{Js}: [J+s-t] is the unique reduced expression");

  RotKey key{sys.matrix().m, J.bits() | (uint32_t(1) << s), s, t};
  {
    std::lock_guard<std::mutex> lock(rot_mutex);
    auto it = rot_cache.find(key);
    if (it != rot_cache.end()) return it->second;
  }

  RotationSequence rs;
  rs.J = J;
  rs.s = s;
  rs.t = t;

  // One minimal period, from u_{-1} until the starting pair recurs.
  int um1 = conj_by_longest(sys, Js, t), u0 = s;
  int prev = um1, cur = u0;
  rs.u.push_back(um1);
  for (;;) {
    int next = conj_by_longest(sys, Js.minus(cur), prev);
    prev = cur;
    cur = next;
    if (prev == um1 && cur == u0) break;
    rs.u.push_back(prev);
    if (rs.u.size() > 4096) throw std::logic_error("rotation sequence failed to close");
  }

  // delta: grow the alternating expression while it stays reduced.
  int limit = 2 * sys.longest_length(Js) + 2;
  for (int k = 1; k <= limit; ++k) {
    if (!is_reduced(sys, alternating_prefix(J, rs, k))) {
      rs.delta = k - 1;
      break;
    }
    if (k == limit) throw std::logic_error("rotation sequence: delta exceeded bound");
  }

  // Cross-checks from the structure theory: the alternating expression tops
  // out at w_{Js} exactly at delta, where the sequence reaches t.
  if (rs.at(rs.delta) != t)
    throw std::logic_error("rotation sequence: u_delta is not t");
  if (evaluate(sys, alternating_prefix(J, rs, rs.delta)).max != sys.longest(Js))
    throw std::logic_error("rotation sequence: alternating maximum is not w_{Js}");
  if (rs.delta > 1 &&
      evaluate(sys, alternating_prefix(J, rs, rs.delta - 1)).max == sys.longest(Js))
    throw std::logic_error("rotation sequence: maximum reached before delta");

  std::lock_guard<std::mutex> lock(rot_mutex);
  return rot_cache.emplace(key, std::move(rs)).first->second;
}

RelationInstance switchback(const System& sys, GenSet J, int s, int t) {
  RotationSequence rs = rotation_sequence(sys, J, s, t);
  RelationInstance r;
  r.kind = RelationKind::Switchback;
  r.position = 0;
  r.forward = false; // lhs is the short side; applying it expands
  r.lhs.start = J;
  r.lhs.steps = {{true, s}, {false, t}};
  r.rhs = alternating_prefix(J, rs, rs.delta);

  GenSet Js = J.plus(s);
  Coset p = coset_of(sys, J, sys.longest(Js), Js.minus(t));
  if (evaluate(sys, r.lhs) != p || evaluate(sys, r.rhs) != p)
    throw std::logic_error("switchback sides disagree");
  if (!is_reduced(sys, r.lhs) || !is_reduced(sys, r.rhs))
    throw std::logic_error("switchback side is not reduced");
  return r;
}

namespace {

// Does the switchback for (J, s, t_cand) exist with its long side equal to
// the given subword? Returns the instance through `out`.
bool match_switchback_rhs(const System& sys, GenSet J, int s, int t_cand,
                          const Expression& subword, RelationInstance& out) {
  RotationSequence rs;
  try {
    rs = rotation_sequence(sys, J, s, t_cand);
  } catch (const NoRotationError&) {
    return false;
  }
  if (2 * rs.delta != subword.width()) return false;
  RelationInstance sb = switchback(sys, J, s, t_cand);
  if (sb.rhs != subword) return false;
  out = sb;
  std::swap(out.lhs, out.rhs);
  out.forward = true; // long side found in the host; applying it shortens
  return true;
}

} // namespace

std::vector<RelationInstance> enumerate_redexes(const System& sys, const Expression& e) {
  validate(sys, e);
  std::vector<RelationInstance> out;
  std::vector<GenSet> I = e.subsets();
  int d = e.width();

  for (int i = 0; i <= d; ++i) {
    // Quadratic expansions [I_i] -> [I_i - s + s], one per generator present.
    for (int s : I[i].elements()) {
      RelationInstance r;
      r.kind = RelationKind::StarQuadratic;
      r.position = i;
      r.forward = false;
      r.lhs.start = I[i];
      r.rhs.start = I[i];
      r.rhs.steps = {{false, s}, {true, s}};
      out.push_back(std::move(r));
    }
    if (i + 2 > d) continue;
    Step a = e.steps[i], b = e.steps[i + 1];

    if (!a.up && b.up && a.gen == b.gen) {
      RelationInstance r;
      r.kind = RelationKind::StarQuadratic;
      r.position = i;
      r.forward = true;
      r.lhs.start = I[i];
      r.lhs.steps = {a, b};
      r.rhs.start = I[i];
      out.push_back(std::move(r));
    } else if (a.up == b.up && a.gen != b.gen) {
      RelationInstance r;
      r.kind = a.up ? RelationKind::UpUp : RelationKind::DownDown;
      r.position = i;
      r.lhs.start = I[i];
      r.lhs.steps = {a, b};
      r.rhs.start = I[i];
      r.rhs.steps = {b, a};
      out.push_back(std::move(r));
    } else if (a.up && !b.up) {
      // Short side of a switchback, [I_i + s - t], unless no rotation exists.
      try {
        RelationInstance r = switchback(sys, I[i], a.gen, b.gen);
        r.position = i;
        out.push_back(std::move(r));
      } catch (const NoRotationError&) {
      }
    }

    if (!a.up && b.up && !I[i].contains(b.gen)) {
      // Candidate long side: the alternating subword [-u_1 +u_0 -u_2 +u_1 ...]
      // starting here; every even-length alternating stretch nominates the
      // last removed letter as t.  A genuine long side never leaves
      // I_i + u_0, so stop as soon as the letters do.
      GenSet Js = I[i].plus(b.gen);
      for (int k = 1; i + 2 * k <= d; ++k) {
        Step down = e.steps[i + 2 * k - 2], up = e.steps[i + 2 * k - 1];
        if (down.up || !up.up) break;
        if (!Js.contains(down.gen) || !Js.contains(up.gen)) break;
        Expression sub;
        sub.start = I[i];
        sub.steps.assign(e.steps.begin() + i, e.steps.begin() + i + 2 * k);
        RelationInstance r;
        if (match_switchback_rhs(sys, I[i], b.gen, down.gen, sub, r)) {
          r.position = i;
          out.push_back(std::move(r));
          break; // at most one full long side per position
        }
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RelationInstance& x, const RelationInstance& y) {
              auto key = [](const RelationInstance& r) {
                return std::make_tuple(r.position, static_cast<int>(r.kind),
                                       !r.forward, r.lhs.width(), r.lhs.steps,
                                       r.rhs.steps);
              };
              return key(x) < key(y);
            });
  return out;
}

Expression apply(const System& sys, const Expression& e, const RelationInstance& r) {
  int w = r.lhs.width();
  if (r.position < 0 || r.position + w > e.width())
    throw std::invalid_argument("stale redex: position out of range");
  std::vector<GenSet> I = e.subsets();
  if (I[r.position] != r.lhs.start ||
      !std::equal(r.lhs.steps.begin(), r.lhs.steps.end(), e.steps.begin() + r.position))
    throw std::invalid_argument("stale redex: subword mismatch");

  Expression result;
  result.start = e.start;
  result.steps.assign(e.steps.begin(), e.steps.begin() + r.position);
  result.steps.insert(result.steps.end(), r.rhs.steps.begin(), r.rhs.steps.end());
  result.steps.insert(result.steps.end(), e.steps.begin() + r.position + w, e.steps.end());
  validate(sys, result);
  if (evaluate(sys, result) != evaluate(sys, e))
    throw std::logic_error("relation application changed the coset");
  return result;
}

std::vector<SwitchbackRow> section6_table(const std::string& type_name) {
  auto sysp = System::from_name(type_name);
  const System& sys = *sysp;
  if (sys.type().components.size() != 1)
    throw std::invalid_argument("section6_table: irreducible type required");

  std::vector<SwitchbackRow> rows;
  for (int a = 0; a < sys.rank(); ++a)
    for (int b = 0; b < sys.rank(); ++b) {
      try {
        RotationSequence rs = rotation_sequence(sys, sys.full_set().minus(a), a, b);
        SwitchbackRow row;
        row.a = a + 1;
        row.b = b + 1;
        for (int i = 1; i < rs.delta; ++i) row.c.push_back(rs.at(i) + 1);
        rows.push_back(std::move(row));
      } catch (const NoRotationError&) {
      }
    }
  return rows;
}

} // namespace scox
