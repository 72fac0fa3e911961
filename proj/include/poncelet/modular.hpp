#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "poncelet/matrix.hpp"

namespace poncelet {

// Arithmetic modulo a prime below 2^63.
namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return power(a, p - 2, p); }

inline std::uint64_t reduce(const BigInt& z, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), BigInt(std::to_string(p)).get_mpz_t());
  return std::stoull(r.get_str());
}

/// Image of q in Z/p, or nullopt when p divides the denominator.
inline std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = reduce(q.denominator(), p);
  if (den == 0) return std::nullopt;
  return mul(reduce(q.numerator(), p), inverse(den, p), p);
}

}  // namespace modp

/// A prime in [2^61, 2^62) drawn deterministically from the seed.
inline std::uint64_t random_prime_62(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::uint64_t low = std::uint64_t{1} << 61;
  BigInt start(std::to_string(low + (gen() % low)));
  BigInt prime;
  mpz_nextprime(prime.get_mpz_t(), start.get_mpz_t());
  if (prime >= BigInt(std::to_string(std::uint64_t{1} << 62))) {
    mpz_nextprime(prime.get_mpz_t(), BigInt(std::to_string(low)).get_mpz_t());
  }
  return std::stoull(prime.get_str());
}

/// Rank of m reduced mod p; nullopt if some denominator vanishes mod p.
inline std::optional<std::size_t> rank_mod_prime(const RationalMatrix& m, std::uint64_t p) {
  Matrix<std::uint64_t> a(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = modp::reduce(m(i, j), p);
      if (!v) return std::nullopt;
      a(i, j) = *v;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    const std::uint64_t inv = modp::inverse(a(r, c), p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const std::uint64_t f = modp::mul(a(i, c), inv, p);
      for (std::size_t j = c; j < a.cols(); ++j) {
        const std::uint64_t sub = modp::mul(f, a(r, j), p);
        a(i, j) = a(i, j) >= sub ? a(i, j) - sub : a(i, j) + p - sub;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace poncelet
