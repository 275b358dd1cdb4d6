#include "scox/coset.h"

#include <set>
#include <stdexcept>

namespace scox {

namespace {

// K = {s in J : min^{-1} s min in W_I}, read off from root supports:
// conjugating s by the minimal representative lands in W_I exactly when the
// root min^{-1}(alpha_s) is supported on I.
GenSet redundancy_from_roots(const System& sys, GenSet J, const Element& minimal, GenSet I) {
  GenSet K;
  Element inv = sys.inverse(minimal);
  for (int s : J.elements()) {
    int32_t r = sys.root_image(inv, s + 1);
    // s is not a left descent of the minimum, so the image stays positive.
    if (I.contains(sys.root_support(r - 1))) K.add(s);
  }
  return K;
}

} // namespace

Coset coset_of(const System& sys, GenSet J, const Element& w, GenSet I) {
  if (!sys.is_finitary(J) || !sys.is_finitary(I))
    throw std::domain_error("coset_of: J and I must be finitary");

  Element lo = w;
  for (bool moved = true; moved;) {
    moved = false;
    GenSet ld = sys.left_descents(lo) & J;
    if (!ld.empty()) {
      lo = sys.lmul(ld.first(), lo);
      moved = true;
      continue;
    }
    GenSet rd = sys.right_descents(lo) & I;
    if (!rd.empty()) {
      lo = sys.mul(lo, rd.first());
      moved = true;
    }
  }

  Element hi = w;
  for (bool moved = true; moved;) {
    moved = false;
    GenSet la = J - sys.left_descents(hi);
    if (!la.empty()) {
      hi = sys.lmul(la.first(), hi);
      moved = true;
      continue;
    }
    GenSet ra = I - sys.right_descents(hi);
    if (!ra.empty()) {
      hi = sys.mul(hi, ra.first());
      moved = true;
    }
  }

  Coset p;
  p.left = J;
  p.right = I;
  p.min = std::move(lo);
  p.max = std::move(hi);
  p.red_left = redundancy_from_roots(sys, J, p.min, I);
  p.red_right = redundancy_from_roots(sys, I, sys.inverse(p.min), J);
  return p;
}

Coset identity_coset(const System& sys, GenSet J) {
  return coset_of(sys, J, sys.identity(), J);
}

bool is_identity_coset(const System& sys, const Coset& p) {
  return p.left == p.right && sys.is_identity(p.min);
}

GenSet left_redundancy(const Coset& p) { return p.red_left; }
GenSet right_redundancy(const Coset& p) { return p.red_right; }

Coset compose(const System& sys, const Coset& q, const Coset& p) {
  if (q.right != p.left)
    throw std::invalid_argument("compose: middle parabolic subsets differ");
  return coset_of(sys, q.left, sys.star(q.max, p.max), p.right);
}

CosetLengths coset_lengths(const System& sys, const Coset& p) {
  CosetLengths out;
  out.plus = sys.length(p.max) - sys.longest_length(p.left);
  out.minus = sys.length(p.min) + sys.longest_length(p.left) -
              sys.longest_length(p.red_left);
  out.total = out.plus + out.minus;
  return out;
}

Coset core(const System& sys, const Coset& p) {
  return coset_of(sys, p.red_left, p.min, p.red_right);
}

bool in_parabolic(const System& sys, const Element& w, GenSet I) {
  for (int s : sys.word(w))
    if (!I.contains(s)) return false;
  return true;
}

std::vector<Element> quotient_reps(const System& sys, GenSet J, GenSet K) {
  std::vector<Element> reps;
  std::vector<Element> stack{sys.identity()};
  std::set<Element> seen{sys.identity()};
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    if ((sys.right_descents(x) & K).empty()) reps.push_back(x);
    for (int s : J.elements()) {
      Element y = sys.mul(x, s);
      if (sys.length(y) > sys.length(x) && seen.insert(y).second)
        stack.push_back(std::move(y));
    }
  }
  return reps;
}

std::vector<Element> coset_elements(const System& sys, const Coset& p, size_t bound) {
  // |coset| = |W_J| / |W_K| * |W_I|; sizes come from enumerating the two
  // factor sets, so cap those enumerations as we go.
  std::vector<Element> left_reps = quotient_reps(sys, p.left, p.red_left);
  std::vector<Element> right_all = quotient_reps(sys, p.right, GenSet());
  if (left_reps.size() > bound || right_all.size() > bound ||
      left_reps.size() * right_all.size() > bound)
    throw std::length_error("coset_elements: coset larger than the requested bound");

  std::vector<Element> out;
  out.reserve(left_reps.size() * right_all.size());
  for (const Element& x : left_reps)
    for (const Element& y : right_all) out.push_back(sys.mul(sys.mul(x, p.min), y));
  return out;
}

Coset plus_J(const System& product, const System& base, const Coset& p, GenSet J) {
  GenSet base_set = GenSet::full(base.rank());
  if (!(J & base_set).empty())
    throw std::domain_error("plus_J: J must be disjoint from the base system");
  if (!product.is_finitary(J)) throw std::domain_error("plus_J: J must be finitary");
  Element lifted = product.from_word(base.word(p.min));
  return coset_of(product, p.left | J, lifted, p.right | J);
}

} // namespace scox
