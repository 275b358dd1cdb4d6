// Exact arithmetic in Z[phi], phi = (1+sqrt 5)/2, phi^2 = phi + 1.
//
// Root coordinates for the crystallographic types are plain integers, but
// types H3, H4 and I2(5) need the golden ratio. Storing every coordinate as
// a + b*phi keeps the whole reflection action exact with one scalar type.

#ifndef SCOX_ZPHI_H
#define SCOX_ZPHI_H

#include <cstdint>
#include <functional>

namespace scox {

struct Zphi {
  int64_t a = 0; // rational part
  int64_t b = 0; // coefficient of phi

  constexpr Zphi() = default;
  constexpr Zphi(int64_t a_, int64_t b_ = 0) : a(a_), b(b_) {}

  friend constexpr Zphi operator+(Zphi x, Zphi y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Zphi operator-(Zphi x, Zphi y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr Zphi operator-(Zphi x) { return {-x.a, -x.b}; }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend constexpr Zphi operator*(Zphi x, Zphi y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr bool operator==(Zphi x, Zphi y) { return x.a == y.a && x.b == y.b; }
  friend constexpr bool operator!=(Zphi x, Zphi y) { return !(x == y); }

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  // Sign of a + b*phi as a real number, computed exactly:
  // a + b phi > 0  <=>  (2a + b) + b sqrt5 > 0.
  constexpr int sign() const {
    int64_t u = 2 * a + b; // rational part, doubled
    int64_t v = b;         // sqrt5 coefficient
    if (u == 0 && v == 0) return 0;
    if (u >= 0 && v >= 0) return 1;
    if (u <= 0 && v <= 0) return -1;
    // u, v of opposite signs: compare u^2 with 5 v^2.
    if (u > 0) return u * u > 5 * v * v ? 1 : -1;
    return u * u < 5 * v * v ? 1 : -1;
  }
};

struct ZphiHash {
  size_t operator()(Zphi x) const {
    uint64_t h = static_cast<uint64_t>(x.a) * UINT64_C(0x9e3779b97f4a7c15);
    h ^= static_cast<uint64_t>(x.b) + UINT64_C(0x517cc1b727220a95) + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

} // namespace scox

#endif
