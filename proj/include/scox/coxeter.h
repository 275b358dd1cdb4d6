// Finite Coxeter systems and exact element arithmetic.
//
// An element is stored as a signed permutation of the positive roots: img[i]
// is w(beta_i), encoded as +-(j+1). Length is the number of positive roots
// sent negative, descent sets are read off the images of simple roots, and
// all of it is exact. Root data is built once per system:
//
//   * crystallographic components use integer root coordinates (asymmetric
//     Cartan entries for bonds 4 and 6);
//   * components containing a 5-bond use Z[phi] coordinates;
//   * irreducible rank-2 components with any other bond use a dedicated
//     dihedral model (roots indexed 0..m-1 around the circle).
//
// The three constructions agree where they overlap; the test suite checks
// this against independent oracles.

#ifndef SCOX_COXETER_H
#define SCOX_COXETER_H

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scox/smallset.h"
#include "scox/zphi.h"

namespace scox {

// m(s,t) = 0 encodes an infinite bond.
constexpr int infinite_bond = 0;

struct CoxeterMatrix {
  int rank = 0;
  std::vector<std::vector<int>> m;

  static CoxeterMatrix from_entries(const std::vector<std::vector<int>>& entries);
  int bond(int i, int j) const { return m[i][j]; }
};

// ---------------------------------------------------------------- classification

struct TypeComponent {
  std::string name;       // "A5", "B3", "E8", "I2(7)", ...
  std::vector<int> nodes; // generator indices in canonical diagram order
  bool finite = false;
  long long positive_roots = 0; // 0 when infinite
};

struct Classification {
  bool finite = false;
  std::vector<TypeComponent> components;
  std::string name() const; // "A2xB3", "infinite"
};

// Classify the sub-diagram spanned by `subset` against the finite-type list.
Classification classify(const CoxeterMatrix& mat, GenSet subset);

// ---------------------------------------------------------------- elements

class Element {
public:
  Element() = default;
  explicit Element(std::vector<int32_t> img) : d_img(std::move(img)) {}

  int32_t operator[](size_t i) const { return d_img[i]; }
  size_t size() const { return d_img.size(); }
  const std::vector<int32_t>& img() const { return d_img; }

  friend bool operator==(const Element& a, const Element& b) { return a.d_img == b.d_img; }
  friend bool operator!=(const Element& a, const Element& b) { return a.d_img != b.d_img; }
  friend bool operator<(const Element& a, const Element& b) { return a.d_img < b.d_img; }

  size_t hash() const {
    size_t h = d_img.size();
    for (int32_t v : d_img)
      h ^= static_cast<size_t>(static_cast<uint32_t>(v)) + 0x9e3779b9u + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::vector<int32_t> d_img;
};

struct ElementHash {
  size_t operator()(const Element& x) const { return x.hash(); }
};

// ---------------------------------------------------------------- the system

class System {
public:
  // Build from an explicit Coxeter matrix; throws std::domain_error unless
  // the whole system is of finite type. Labels default to s1..sn.
  System(CoxeterMatrix mat, std::vector<std::string> labels = {});

  // "A3", "B4", "I2(7)", products like "A2xA1" (also accepts '×').
  static std::unique_ptr<System> from_name(const std::string& name);

  System(const System&) = delete;
  System& operator=(const System&) = delete;

  int rank() const { return d_mat.rank; }
  int bond(int i, int j) const { return d_mat.m[i][j]; }
  const CoxeterMatrix& matrix() const { return d_mat; }
  const std::string& label(int s) const { return d_labels[s]; }
  const std::vector<std::string>& labels() const { return d_labels; }
  int generator_by_label(const std::string& lbl) const; // -1 when unknown
  GenSet full_set() const { return GenSet::full(rank()); }
  const Classification& type() const { return d_type; }

  bool is_finitary(GenSet I) const { return classify(d_mat, I).finite; }

  // --- positive roots
  int num_roots() const { return d_num_roots; }
  GenSet root_support(int r) const { return d_root_support[r]; }
  const Element& reflection(int r) const { return d_reflections[r]; }

  // --- element arithmetic
  const Element& identity() const { return d_identity; }
  const Element& generator(int s) const { return d_gen[s]; }

  Element mul(const Element& x, const Element& y) const;        // x then... (xy)(b) = x(y(b))
  Element mul(const Element& x, int s) const { return mul(x, d_gen[s]); }
  Element lmul(int s, const Element& x) const { return mul(d_gen[s], x); }
  Element inverse(const Element& x) const;

  int length(const Element& x) const;
  bool is_identity(const Element& x) const { return x == d_identity; }
  GenSet right_descents(const Element& x) const;
  GenSet left_descents(const Element& x) const;

  // Signed image of a signed root under x; roots encoded +-(index+1).
  int32_t root_image(const Element& x, int32_t signed_root) const;

  // Longest element of the (finitary) parabolic W_I, cached.
  const Element& longest(GenSet I) const;
  int longest_length(GenSet I) const { return length(longest(I)); }

  // Demazure (star) product: x*s = xs if that is longer, else x.
  Element star(const Element& x, int s) const;
  Element star(const Element& x, const Element& y) const;

  // ShortLex-least reduced word (repeatedly take the smallest left descent).
  std::vector<int> word(const Element& x) const;
  Element from_word(const std::vector<int>& w) const;

  // Bruhat order via the subword test against the canonical word of y.
  bool bruhat_leq(const Element& x, const Element& y) const;

  // Is w equal to the simple generator s for some s in mask? Returns -1 or s.
  // (Used for Kilmoyer-style "p t p^{-1} in J" tests.)
  int as_simple(const Element& w) const;

private:
  CoxeterMatrix d_mat;
  std::vector<std::string> d_labels;
  Classification d_type;

  int d_num_roots = 0;
  std::vector<GenSet> d_root_support;
  std::vector<Element> d_gen;
  Element d_identity;
  std::vector<Element> d_reflections;

  mutable std::mutex d_cache_mutex;
  mutable std::map<uint32_t, Element> d_longest_cache;

  void build_engine();
};

} // namespace scox

#endif
