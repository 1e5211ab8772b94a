#ifndef GARNIER_MONOMIAL_HPP
#define GARNIER_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "garnier/vars.hpp"

namespace garnier {

// Exponent vector over the fixed 11-variable order.
struct Monomial {
  std::array<std::uint32_t, kNumVars> e{};

  static Monomial one() { return Monomial{}; }
  static Monomial unit(int v, std::uint32_t k = 1) {
    Monomial m;
    m.e[static_cast<size_t>(v)] = k;
    return m;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e)
      d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e)
      if (x)
        return false;
    return true;
  }

  Monomial operator*(const Monomial &o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
      r.e[i] = e[i] + o.e[i];
    return r;
  }

  bool divides(const Monomial &o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i])
        return false;
    return true;
  }

  // Componentwise o/this; caller guarantees divides(o).
  Monomial divide_into(const Monomial &o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
      r.e[i] = o.e[i] - e[i];
    return r;
  }

  friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Graded lexicographic: higher total degree first, ties broken by the fixed
// variable order (earlier variable with larger exponent wins).
inline int grlex_cmp(const Monomial &a, const Monomial &b) {
  const std::uint64_t da = a.degree(), db = b.degree();
  if (da != db)
    return da < db ? -1 : 1;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

inline bool grlex_less(const Monomial &a, const Monomial &b) {
  return grlex_cmp(a, b) < 0;
}

struct MonomialHash {
  size_t operator()(const Monomial &m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : m.e) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<size_t>(h ^ (h >> 33));
  }
};

} // namespace garnier

#endif
