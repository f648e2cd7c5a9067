#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace laxcenter {

using Integer = mpz_class;
using Vec = std::vector<Integer>;

/// Additive order of each coordinate; 0 marks a free (torsion-free) coordinate.
using Moduli = std::vector<Integer>;

/// Reduces `x` into [0, m) for m > 0; leaves it alone for m == 0.
inline Integer reduce_mod(const Integer& x, const Integer& m) {
  if (m == 0) return x;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Componentwise reduction of `v` by `moduli` (lengths must agree).
Vec reduce_vec(std::span<const Integer> v, std::span<const Integer> moduli);

bool is_zero(std::span<const Integer> v);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

std::string to_string(std::span<const Integer> v);

}  // namespace laxcenter
