#include "normalp/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "normalp/error.hpp"

namespace normalp {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned r) noexcept {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho; n is odd and composite.
std::uint64_t rho_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, saved = 2;
    for (std::uint64_t r = 1; g == 1; r <<= 1U) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += 128) {
        saved = y;
        for (std::uint64_t i = 0; i < 128 && i < r - k; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        saved = step(saved);
        g = std::gcd(x > saved ? x - saved : saved - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = rho_divisor(n);
  split_large(d, primes);
  split_large(n / d, primes);
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::string(what) + " must be prime, got " + std::to_string(p));
  }
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw InvalidArgument(std::to_string(base) + "^" + std::to_string(exp) +
                            " does not fit in 64 bits");
    }
    result *= base;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These bases are a deterministic witness set below 2^64.
  for (auto a : small) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("cannot factorize 0");
  Factorization f;
  f.value = m;
  auto take = [&](std::uint64_t q) {
    std::uint32_t e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) f.parts.push_back({q, e});
  };
  take(2);
  take(3);
  constexpr std::uint64_t kTrialLimit = 1000;
  for (std::uint64_t q = 5; q <= kTrialLimit && q <= m / q; q += 6) {
    take(q);
    take(q + 2);
  }
  if (m > 1 && m < kTrialLimit * kTrialLimit) {
    f.parts.push_back({m, 1});
  } else if (m > 1) {
    std::vector<std::uint64_t> primes;
    split_large(m, primes);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t q : primes) {
      if (!f.parts.empty() && f.parts.back().prime == q) ++f.parts.back().exponent;
      else f.parts.push_back({q, 1});
    }
  }
  return f;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& part : f.parts) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (std::uint32_t e = 1; e <= part.exponent; ++e) {
      power *= part.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigNat gamma(std::uint32_t t, std::uint64_t q) {
  require_prime(q, "q");
  BigNat result = 1;
  BigNat power = 1;
  for (std::uint32_t i = 1; i <= t; ++i) {
    power *= q;
    result *= power - 1;
  }
  return result;
}

BigNat big_gamma(std::uint64_t m) {
  BigNat result = 1;
  for (const auto& part : factorize(m).parts) result *= gamma(part.exponent, part.prime);
  return result;
}

std::uint32_t padic_valuation(const BigNat& x, std::uint64_t p) {
  require_prime(p, "p");
  if (x == 0) throw InvalidArgument("p-adic valuation of 0 is infinite");
  std::uint32_t e = 0;
  BigNat rest = x;
  const BigNat prime = p;
  while (rest % prime == 0) {
    rest /= prime;
    ++e;
  }
  return e;
}

std::uint32_t padic_valuation(std::uint64_t x, std::uint64_t p) {
  require_prime(p, "p");
  if (x == 0) throw InvalidArgument("p-adic valuation of 0 is infinite");
  std::uint32_t e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n < 2 || std::gcd(a, n) != 1) {
    throw InvalidArgument("multiplicative order needs gcd(a, n) = 1 and n >= 2");
  }
  std::uint64_t phi = n;
  for (const auto& part : factorize(n).parts) phi = phi / part.prime * (part.prime - 1);
  std::uint64_t order = phi;
  for (const auto& part : factorize(phi).parts) {
    while (order % part.prime == 0 && pow_mod(a, order / part.prime, n) == 1) order /= part.prime;
  }
  return order;
}

std::uint32_t gamma_valuation(std::uint32_t t, std::uint64_t q, std::uint64_t p) {
  require_prime(q, "q");
  require_prime(p, "p");
  if (p == q || t == 0) return 0;
  std::uint32_t total = 0;
  if (p == 2) {
    // Lifting the exponent for p = 2 and odd q.
    const std::uint32_t odd_part = padic_valuation(BigNat(q) - 1, 2);
    const std::uint32_t even_part = padic_valuation(BigNat(q) * q - 1, 2);
    for (std::uint32_t j = 1; j <= t; ++j) {
      total += (j % 2 == 1) ? odd_part : even_part + padic_valuation(std::uint64_t{j}, 2) - 1;
    }
    return total;
  }
  const std::uint64_t d = multiplicative_order(q % p, p);
  if (d > t) return 0;
  BigNat qd = 1;
  for (std::uint64_t i = 0; i < d; ++i) qd *= q;
  const std::uint32_t base = padic_valuation(qd - 1, p);
  for (std::uint64_t j = d; j <= t; j += d) {
    total += base + padic_valuation(j / d, p);
  }
  return total;
}

std::uint32_t big_gamma_valuation(std::uint64_t m, std::uint64_t p) {
  require_prime(p, "p");
  std::uint32_t total = 0;
  for (const auto& part : factorize(m).parts) total += gamma_valuation(part.exponent, part.prime, p);
  return total;
}

}  // namespace normalp
