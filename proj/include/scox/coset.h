// Parabolic double cosets W_J w W_I, the morphisms of the singular Coxeter
// monoid. A coset is determined by (J, I, min); the maximum and the two
// redundancies are cheap consequences and are computed once at construction.

#ifndef SCOX_COSET_H
#define SCOX_COSET_H

#include <vector>

#include "scox/coxeter.h"
#include "scox/smallset.h"

namespace scox {

struct Coset {
  GenSet left;   // J
  GenSet right;  // I
  Element min;   // minimal element, the canonical representative
  Element max;   // maximal element
  GenSet red_left;  // K = J n min W_I min^{-1}, the left redundancy
  GenSet red_right; // L = I n min^{-1} W_J min

  // Cosets with the same (J, I, min) are the same morphism; max and the
  // redundancies are derived data.
  friend bool operator==(const Coset& a, const Coset& b) {
    return a.left == b.left && a.right == b.right && a.min == b.min;
  }
  friend bool operator!=(const Coset& a, const Coset& b) { return !(a == b); }
  friend bool operator<(const Coset& a, const Coset& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    return a.min < b.min;
  }
  size_t hash() const {
    size_t h = min.hash();
    h ^= GenSetHash()(left) + 0x9e3779b9u + (h << 6) + (h >> 2);
    h ^= GenSetHash()(right) + 0x9e3779b9u + (h << 6) + (h >> 2);
    return h;
  }
};

struct CosetHash {
  size_t operator()(const Coset& p) const { return p.hash(); }
};

struct CosetLengths {
  int plus = 0;  // how far max hangs below adding w_I on the right
  int minus = 0; // how far min exceeds the identity after the w_J credit
  int total = 0; // plus + minus; zero exactly for identity cosets
};

// The (J,I)-coset containing w. J and I must be finitary (always true in a
// finite system). The minimum is found by greedily stripping the
// lowest-indexed left descent in J / right descent in I, the maximum by the
// mirror-image ascent.
Coset coset_of(const System& sys, GenSet J, const Element& w, GenSet I);

// The identity morphism at J: the (J,J)-coset of e.
Coset identity_coset(const System& sys, GenSet J);
bool is_identity_coset(const System& sys, const Coset& p);

GenSet left_redundancy(const Coset& p);  // K
GenSet right_redundancy(const Coset& p); // L

// Composition of q: J -> K with p: I -> J (a (K,J)- with a (J,I)-coset),
// i.e. the (K,I)-coset of q.max * p.max; that star product is already the
// maximum of the result. Throws std::invalid_argument on a middle mismatch.
Coset compose(const System& sys, const Coset& q, const Coset& p);

CosetLengths coset_lengths(const System& sys, const Coset& p);

// The core of p: the (K,L)-coset of min, which has full redundancy.
Coset core(const System& sys, const Coset& p);

// Does w lie in the standard parabolic W_I?
bool in_parabolic(const System& sys, const Element& w, GenSet I);

// All elements of the coset, as {x min y : x in W^K n W_J, y in W_I} with
// lengths adding. Throws std::length_error when the coset is bigger than
// `bound`.
std::vector<Element> coset_elements(const System& sys, const Coset& p,
                                    size_t bound = 1u << 20);

// Enlarge a coset of `base` by a disjoint finitary J of `product`. The
// product system must contain base's generators as its first base.rank()
// indices; J must avoid those. Lengths are preserved.
Coset plus_J(const System& product, const System& base, const Coset& p, GenSet J);

// Minimal-length representatives of W_J / W_K (K inside J): the x in W_J
// with no right descents in K. Used by coset_elements and the test suite.
std::vector<Element> quotient_reps(const System& sys, GenSet J, GenSet K);

} // namespace scox

#endif
