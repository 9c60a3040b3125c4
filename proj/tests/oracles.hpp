#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <cstdint>
#include <random>
#include <vector>

#include "ppclass/gf.hpp"
#include "ppclass/poly.hpp"

namespace oracle {

using Digits = std::vector<std::uint32_t>;

// Residues mod a monic modulus over F_p, coefficient lists low degree first.
struct Schoolbook {
  std::uint32_t p;
  Digits modulus;

  std::size_t n() const { return modulus.size() - 1; }

  Digits add(const Digits& a, const Digits& b) const {
    Digits out(n());
    for (std::size_t i = 0; i < n(); ++i) out[i] = (a[i] + b[i]) % p;
    return out;
  }

  Digits mul(const Digits& a, const Digits& b) const {
    std::vector<std::uint64_t> prod(2 * n(), 0);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > n();) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= n(); ++i) {
        prod[d - n() + i] = (prod[d - n() + i] + (p - c) * modulus[i]) % p;
      }
    }
    Digits out(n());
    for (std::size_t i = 0; i < n(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  }
};

inline std::uint32_t poly_at(const Digits& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

// Smallest monic irreducible of degree 2 or 3, constant term most significant.
// For these degrees irreducible means root-free.
inline Digits smallest_irreducible_small(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Digits f(n + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    bool root = false;
    for (std::uint32_t x = 0; x < p && !root; ++x) root = poly_at(f, x, p) == 0;
    if (!root) return f;
  }
  return {};
}

// Lagrange interpolation through every point, no reduction tricks.
inline std::vector<ppclass::Elem> lagrange(const ppclass::Field& F, const std::vector<ppclass::Elem>& values) {
  using ppclass::Elem;
  const std::uint32_t q = F.q();
  std::vector<Elem> result(q, Elem{0});
  for (std::uint32_t i = 0; i < q; ++i) {
    if (values[i].index == 0) continue;
    std::vector<Elem> basis{Elem{1}};
    Elem denom = F.one();
    for (std::uint32_t j = 0; j < q; ++j) {
      if (j == i) continue;
      std::vector<Elem> next(basis.size() + 1, Elem{0});
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = F.add(next[k + 1], basis[k]);
        next[k] = F.sub(next[k], F.mul(basis[k], Elem{j}));
      }
      basis = std::move(next);
      denom = F.mul(denom, F.sub(Elem{i}, Elem{j}));
    }
    const Elem scale = F.div(values[i], denom);
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = F.add(result[k], F.mul(scale, basis[k]));
  }
  while (!result.empty() && result.back().index == 0) result.pop_back();
  return result;
}

inline ppclass::Elem horner(const ppclass::Field& F, const std::vector<ppclass::Elem>& c, ppclass::Elem x) {
  ppclass::Elem acc{0};
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

inline ppclass::Poly random_v(const ppclass::Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
  std::vector<ppclass::Elem> c(F.q() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = ppclass::Elem{d(rng)};
  return ppclass::Poly(std::move(c));
}

}  // namespace oracle
