#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace normalp {

/// Exact nonnegative integer of unbounded size.
using BigNat = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer; parts sorted by prime,
/// empty for 1.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> parts;

  bool is_prime_power() const noexcept { return parts.size() == 1; }
};

/// Deterministic primality test valid for the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// Trial-division factorization. Throws InvalidArgument for 0.
Factorization factorize(std::uint64_t m);

/// All positive divisors of the factored value, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

/// (q^t - 1)(q^(t-1) - 1)...(q - 1); 1 for t = 0. Throws when q is not prime.
BigNat gamma(std::uint32_t t, std::uint64_t q);

/// Product of gamma(t_i, q_i) over the factorization of m.
BigNat big_gamma(std::uint64_t m);

/// Largest e with p^e | x. Throws InvalidArgument when x = 0 or p is not prime.
std::uint32_t padic_valuation(const BigNat& x, std::uint64_t p);
std::uint32_t padic_valuation(std::uint64_t x, std::uint64_t p);

/// v_p(gamma(t, q)) as a sum of v_p(q^j - 1); never forms the product.
std::uint32_t gamma_valuation(std::uint32_t t, std::uint64_t q, std::uint64_t p);

/// v_p(big_gamma(m)) without materializing big_gamma(m).
std::uint32_t big_gamma_valuation(std::uint64_t m, std::uint64_t p);

/// Multiplicative order of a modulo n (gcd(a, n) = 1, n >= 2).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

/// base^exp, throwing InvalidArgument on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

}  // namespace normalp
