#include "scox/expression.h"

#include <algorithm>
#include <stdexcept>

namespace scox {

namespace {

std::string gen_name(const System& sys, int s) {
  return s >= 0 && s < sys.rank() ? sys.label(s) : "s?";
}

// Generators of I in ascending index order.
std::vector<int> ascending(GenSet I) { return I.elements(); }

std::vector<int> descending(GenSet I) {
  std::vector<int> v = I.elements();
  std::reverse(v.begin(), v.end());
  return v;
}

} // namespace

void validate(const System& sys, const Expression& e) {
  if (!sys.is_finitary(e.start))
    throw std::invalid_argument("expression start is not finitary");
  GenSet I = e.start;
  for (const Step& st : e.steps) {
    if (st.gen < 0 || st.gen >= sys.rank())
      throw std::invalid_argument("expression step uses an unknown generator");
    if (st.up) {
      if (I.contains(st.gen))
        throw std::invalid_argument("+" + gen_name(sys, st.gen) +
                                    " but the generator is already present");
      I = I.plus(st.gen);
      if (!sys.is_finitary(I))
        throw std::invalid_argument("expression leaves the finitary subsets");
    } else {
      if (!I.contains(st.gen))
        throw std::invalid_argument("-" + gen_name(sys, st.gen) +
                                    " but the generator is absent");
      I = I.minus(st.gen);
    }
  }
}

Expression from_subsets(const std::vector<GenSet>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty subset chain");
  Expression e;
  e.start = chain.front();
  for (size_t i = 1; i < chain.size(); ++i) {
    GenSet prev = chain[i - 1], cur = chain[i];
    GenSet added = cur - prev, removed = prev - cur;
    if (added.size() + removed.size() != 1)
      throw std::invalid_argument(
          "consecutive subsets must differ by exactly one generator");
    if (added.size() == 1)
      e.steps.push_back({true, added.first()});
    else
      e.steps.push_back({false, removed.first()});
  }
  return e;
}

Coset evaluate(const System& sys, const Expression& e) {
  // The maximum of the evaluated coset is the Demazure product of the
  // longest elements of the subsets; the coset is recovered from it.
  Element top = sys.longest(e.start);
  GenSet I = e.start;
  for (const Step& st : e.steps) {
    I = st.up ? I.plus(st.gen) : I.minus(st.gen);
    top = sys.star(top, sys.longest(I));
  }
  return coset_of(sys, e.start, top, I);
}

ForwardPath forward_path(const System& sys, const Expression& e) {
  ForwardPath path;
  path.cosets.push_back(identity_coset(sys, e.start));
  GenSet I = e.start;
  for (const Step& st : e.steps) {
    const Coset& p = path.cosets.back();
    I = st.up ? I.plus(st.gen) : I.minus(st.gen);
    // Up-steps pass to the unique coset containing p; down-steps keep the
    // maximum, picking the top coset in the subdivision.
    path.cosets.push_back(coset_of(sys, e.start, st.up ? p.min : p.max, I));
  }
  path.redundancy.reserve(path.cosets.size());
  for (const Coset& p : path.cosets) path.redundancy.push_back(p.red_left);
  return path;
}

ReducednessCertificate reducedness_certificate(const System& sys, const Expression& e) {
  ReducednessCertificate cert;
  std::vector<GenSet> I = e.subsets();
  int expected = sys.longest_length(I[0]);
  cert.a0 = sys.longest(I[0]);
  for (size_t i = 1; i < I.size(); ++i) {
    GenSet meet = I[i - 1] & I[i];
    cert.y.push_back(sys.mul(sys.longest(I[i - 1]), sys.inverse(sys.longest(meet))));
    Element zi = sys.mul(sys.inverse(sys.longest(meet)), sys.longest(I[i]));
    cert.z.push_back(zi);
    cert.a0 = sys.mul(cert.a0, zi);
    expected += sys.longest_length(I[i]) - sys.longest_length(meet);
  }
  cert.lengths_add = sys.length(cert.a0) == expected;
  return cert;
}

bool is_reduced(const System& sys, const Expression& e) {
  return reducedness_certificate(sys, e).lengths_add;
}

namespace {

bool step_reduced(const ForwardPath& path, int i) {
  const Coset& p = path.cosets[i];
  const Coset& q = path.cosets[i + 1];
  if (q.right.size() < p.right.size()) return true; // down-steps keep the max
  return q.min == p.min && q.red_left == p.red_left;
}

} // namespace

bool reduced_at(const System& sys, const Expression& e, int i) {
  if (i < 0 || i >= e.width()) throw std::out_of_range("step index");
  return step_reduced(forward_path(sys, e), i);
}

bool is_reduced_williamson(const System& sys, const Expression& e) {
  ForwardPath path = forward_path(sys, e);
  for (int i = 0; i < e.width(); ++i)
    if (!step_reduced(path, i)) return false;
  return true;
}

ExprLengths expr_lengths(const System& sys, const Expression& e) {
  ExprLengths l;
  GenSet I = e.start;
  int len = sys.longest_length(I);
  for (const Step& st : e.steps) {
    I = st.up ? I.plus(st.gen) : I.minus(st.gen);
    int next = sys.longest_length(I);
    if (st.up)
      l.plus += next - len;
    else
      l.minus += len - next;
    len = next;
  }
  l.total = l.plus + l.minus;
  return l;
}

Expression reverse(const Expression& e) {
  Expression r;
  r.start = e.end();
  r.steps.reserve(e.steps.size());
  for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it)
    r.steps.push_back({!it->up, it->gen});
  return r;
}

Expression concat(const Expression& a, const Expression& b) {
  if (a.end() != b.start)
    throw std::invalid_argument("concat: expressions do not meet");
  Expression c = a;
  c.steps.insert(c.steps.end(), b.steps.begin(), b.steps.end());
  return c;
}

bool concat_is_reduced(const System& sys, const Expression& a, const Expression& b) {
  GenSet J = a.end();
  if (J != b.start)
    throw std::invalid_argument("concat: expressions do not meet");
  Element pmax = evaluate(sys, a).max;
  Element qmax = evaluate(sys, b).max;
  Element prod = sys.mul(pmax, sys.mul(sys.inverse(sys.longest(J)), qmax));
  return sys.length(prod) ==
         sys.length(pmax) - sys.longest_length(J) + sys.length(qmax);
}

void validate_multistep(const System& sys, const MultistepExpression& m) {
  const std::vector<GenSet>& c = m.chain;
  if (c.empty() || c.size() % 2 == 0)
    throw std::invalid_argument("multistep chain must be I_0, K_1, I_1, ..., I_m");
  for (size_t i = 0; i < c.size(); ++i) {
    if (!sys.is_finitary(c[i]))
      throw std::invalid_argument("multistep chain leaves the finitary subsets");
    if (i == 0) continue;
    bool into_k = i % 2 == 1;
    GenSet big = into_k ? c[i] : c[i - 1];
    GenSet small = into_k ? c[i - 1] : c[i];
    if (!big.contains(small))
      throw std::invalid_argument("multistep chain is not alternating");
  }
}

Expression multistep_to_singlestep(const System& sys, const MultistepExpression& m) {
  validate_multistep(sys, m);
  Expression e;
  e.start = m.chain[0];
  for (size_t i = 1; i < m.chain.size(); i += 2) {
    for (int s : ascending(m.chain[i] - m.chain[i - 1])) e.steps.push_back({true, s});
    for (int s : descending(m.chain[i] - m.chain[i + 1])) e.steps.push_back({false, s});
  }
  return e;
}

MultistepExpression singlestep_to_multistep(const System& sys, const Expression& e) {
  validate(sys, e);
  MultistepExpression m;
  std::vector<GenSet> I = e.subsets();
  m.chain.push_back(I[0]);
  size_t i = 0;
  while (i < e.steps.size()) {
    // One leg: a (possibly empty) run of ups to K, then downs to the next I.
    size_t j = i;
    while (j < e.steps.size() && e.steps[j].up) ++j;
    m.chain.push_back(I[j]); // K
    size_t k = j;
    while (k < e.steps.size() && !e.steps[k].up) ++k;
    m.chain.push_back(I[k]); // next I
    i = k;
  }
  return m;
}

bool is_reduced_multistep(const System& sys, const MultistepExpression& m) {
  validate_multistep(sys, m);
  const std::vector<GenSet>& c = m.chain;
  if (c.size() == 1) return true;
  Element prod = sys.longest(c[1]);
  int expected = sys.longest_length(c[1]);
  for (size_t i = 3; i < c.size(); i += 2) {
    prod = sys.mul(prod, sys.mul(sys.inverse(sys.longest(c[i - 1])), sys.longest(c[i])));
    expected += sys.longest_length(c[i]) - sys.longest_length(c[i - 1]);
  }
  return sys.length(prod) == expected;
}

Expression some_rex(const System& sys, const Coset& p) {
  const GenSet J = p.left;
  std::vector<Step> rev;
  Coset cur = p;
  int len = coset_lengths(sys, cur).total;
  while (len > 0) {
    GenSet I = cur.right;
    bool found = false;
    // A last step "-t" detaches a generator of right_descents(max) \ I; a
    // last step "+t" re-buries one of I. In both cases the candidate is
    // valid when the forward step from the smaller coset reproduces cur
    // with lengths adding, which keeps the whole expression reduced.
    for (int t : ascending(sys.right_descents(cur.max) - I)) {
      GenSet It = I.plus(t);
      if (!sys.is_finitary(It)) continue;
      Coset pred = coset_of(sys, J, cur.max, It);
      int inc = sys.longest_length(It) - sys.longest_length(I);
      if (coset_lengths(sys, pred).total + inc != len) continue;
      if (coset_of(sys, J, pred.max, I) != cur) continue;
      rev.push_back({false, t});
      cur = pred;
      len -= inc;
      found = true;
      break;
    }
    if (found) continue;
    for (int t : ascending(I)) {
      Coset pred = coset_of(sys, J, cur.min, I.minus(t));
      int inc = sys.longest_length(I) - sys.longest_length(I.minus(t));
      if (coset_lengths(sys, pred).total + inc != len) continue;
      if (coset_of(sys, J, pred.min, I) != cur) continue;
      rev.push_back({true, t});
      cur = pred;
      len -= inc;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("some_rex: no valid last step");
  }
  Expression e;
  e.start = J;
  e.steps.assign(rev.rbegin(), rev.rend());
  return e;
}

Expression high_road(const System& sys, const Coset& p) {
  GenSet M = sys.left_descents(p.max);
  GenSet N = sys.right_descents(p.max);
  Expression e;
  e.start = p.left;
  for (int s : ascending(M - p.left)) e.steps.push_back({true, s});
  Expression mid = some_rex(sys, coset_of(sys, M, p.max, N));
  e.steps.insert(e.steps.end(), mid.steps.begin(), mid.steps.end());
  for (int s : ascending(N - p.right)) e.steps.push_back({false, s});
  return e;
}

Expression low_road(const System& sys, const Coset& p) {
  Expression e;
  e.start = p.left;
  for (int s : descending(p.left - p.red_left)) e.steps.push_back({false, s});
  Expression mid = some_rex(sys, core(sys, p));
  e.steps.insert(e.steps.end(), mid.steps.begin(), mid.steps.end());
  for (int s : ascending(p.right - p.red_right)) e.steps.push_back({true, s});
  return e;
}

Expression extend_to_longest(const System& sys, const Expression& e, GenSet Kprime) {
  if (!is_reduced(sys, e))
    throw std::invalid_argument("extend_to_longest: expression must be reduced");
  Coset p = evaluate(sys, e);
  GenSet J = p.right; // the expression's endpoint
  Element w = sys.mul(sys.longest(J), sys.mul(sys.inverse(p.max), sys.longest(sys.full_set())));
  GenSet K = sys.right_descents(w);
  if (!K.contains(Kprime))
    throw std::domain_error("extend_to_longest: target subset exceeds the descents of the completion");
  Coset q = coset_of(sys, J, w, Kprime);
  return concat(e, some_rex(sys, q));
}

Expression iota_embed(const Expression& e, const std::vector<int>& order) {
  std::vector<int> ord = order.empty() ? ascending(e.start) : order;
  GenSet seen;
  Expression out;
  for (int s : ord) {
    if (!e.start.contains(s) || seen.contains(s))
      throw std::invalid_argument("iota_embed: order must enumerate the start");
    seen = seen.plus(s);
    out.steps.push_back({true, s});
  }
  if (seen != e.start)
    throw std::invalid_argument("iota_embed: order must enumerate the start");
  out.steps.insert(out.steps.end(), e.steps.begin(), e.steps.end());
  return out;
}

Expression kappa_embed(const Expression& e, const std::vector<int>& order) {
  GenSet L = e.end();
  std::vector<int> ord = order.empty() ? descending(L) : order;
  GenSet seen;
  Expression out = e;
  for (int s : ord) {
    if (!L.contains(s) || seen.contains(s))
      throw std::invalid_argument("kappa_embed: order must enumerate the end");
    seen = seen.plus(s);
    out.steps.push_back({false, s});
  }
  if (seen != L)
    throw std::invalid_argument("kappa_embed: order must enumerate the end");
  return out;
}

} // namespace scox
