// Small sets of generator indices, packed into a 32-bit mask.
//
// Every subset of S that the library manipulates (parabolic types J, I, K,
// ...) is a GenSet. Rank is capped at 32 generators, far beyond the finite
// types we support.

#ifndef SCOX_SMALLSET_H
#define SCOX_SMALLSET_H

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace scox {

class GenSet {
public:
  constexpr GenSet() : d_bits(0) {}
  constexpr explicit GenSet(uint32_t bits) : d_bits(bits) {}
  GenSet(std::initializer_list<int> gens) : d_bits(0) {
    for (int g : gens) add(g);
  }

  static constexpr GenSet full(int rank) {
    return GenSet(rank >= 32 ? ~UINT32_C(0) : (UINT32_C(1) << rank) - 1);
  }

  constexpr uint32_t bits() const { return d_bits; }
  constexpr bool empty() const { return d_bits == 0; }
  constexpr int size() const { return std::popcount(d_bits); }
  constexpr bool contains(int g) const { return (d_bits >> g) & 1; }
  constexpr bool contains(GenSet o) const { return (o.d_bits & ~d_bits) == 0; }

  void add(int g) { d_bits |= UINT32_C(1) << g; }
  void remove(int g) { d_bits &= ~(UINT32_C(1) << g); }

  constexpr GenSet plus(int g) const { return GenSet(d_bits | (UINT32_C(1) << g)); }
  constexpr GenSet minus(int g) const { return GenSet(d_bits & ~(UINT32_C(1) << g)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.d_bits | b.d_bits); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.d_bits & b.d_bits); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.d_bits & ~b.d_bits); }
  friend constexpr bool operator==(GenSet a, GenSet b) { return a.d_bits == b.d_bits; }
  friend constexpr bool operator!=(GenSet a, GenSet b) { return a.d_bits != b.d_bits; }
  friend constexpr bool operator<(GenSet a, GenSet b) { return a.d_bits < b.d_bits; }

  // Lowest generator index, or -1 when empty.
  int first() const { return d_bits ? std::countr_zero(d_bits) : -1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint32_t m = d_bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // Iteration: for (int g : set.elements()) — kept simple on purpose.

private:
  uint32_t d_bits;
};

struct GenSetHash {
  size_t operator()(GenSet s) const { return std::hash<uint32_t>()(s.bits()); }
};

} // namespace scox

#endif
