#include "prodset/numtheory.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace prodset {

namespace {

constexpr std::int32_t kSmallPrimeBound = 1 << 16;

std::vector<std::int32_t> sieve_small_primes() {
  std::vector<bool> composite(kSmallPrimeBound, false);
  std::vector<std::int32_t> primes;
  for (std::int32_t i = 2; i < kSmallPrimeBound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = std::int64_t{i} * i; j < kSmallPrimeBound; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return primes;
}

void require_positive(std::int64_t x, const char* who) {
  if (x < 1) {
    throw std::invalid_argument(std::string(who) + ": input must be a positive integer");
  }
}

}  // namespace

const std::vector<std::int32_t>& small_primes() {
  static const std::vector<std::int32_t> primes = sieve_small_primes();
  return primes;
}

std::int64_t isqrt64(std::int64_t x) {
  assert(x >= 0);
  if (x < 2) return x;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  // Division-based correction; r*r could overflow near INT64_MAX.
  while (r > 0 && r > x / r) --r;
  while (r + 1 <= x / (r + 1)) ++r;
  return r;
}

Factorization factorize(std::int64_t x) {
  require_positive(x, "factorize");
  Factorization f;
  f.value = x;
  std::int64_t rest = x;
  for (std::int32_t p : small_primes()) {
    if (std::int64_t{p} * p > rest) break;
    if (rest % p != 0) continue;
    std::int32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) {
    if (rest < std::int64_t{kSmallPrimeBound} * kSmallPrimeBound) {
      f.factors.push_back({rest, 1});
    } else {
      // No factor below 2^16 remains; continue with odd candidates. Any
      // candidate that divides is prime, smaller divisors being exhausted.
      // q <= rest/q instead of q*q <= rest: the square can overflow.
      std::int64_t q = kSmallPrimeBound + 1;
      while (q <= rest / q) {
        if (rest % q == 0) {
          std::int32_t e = 0;
          while (rest % q == 0) {
            rest /= q;
            ++e;
          }
          f.factors.push_back({q, e});
        }
        q += 2;
      }
      if (rest > 1) f.factors.push_back({rest, 1});
    }
  }
  return f;
}

Factorization product_factorization(const Factorization& a, const Factorization& b) {
  auto wide = static_cast<unsigned __int128>(a.value) * static_cast<unsigned __int128>(b.value);
  if (wide > static_cast<unsigned __int128>(INT64_MAX)) {
    throw std::overflow_error("product_factorization: product exceeds 64-bit range");
  }
  Factorization out;
  out.value = a.value * b.value;
  auto ia = a.factors.begin();
  auto ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->prime < ib->prime)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->prime < ia->prime) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.push_back({ia->prime, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int32_t p : small_primes()) {
    if (std::int64_t{p} * p > x) return true;
    if (x % p == 0) return x == p;
  }
  std::int64_t q = kSmallPrimeBound + 1;
  while (q <= x / q) {
    if (x % q == 0) return false;
    q += 2;
  }
  return true;
}

std::int64_t next_prime(std::int64_t x) {
  std::int64_t c = std::max<std::int64_t>(x + 1, 2);
  while (!is_prime(c)) ++c;
  return c;
}

std::int64_t divisor_count(const Factorization& f) {
  std::int64_t count = 1;
  for (const PrimePower& pp : f.factors) count *= pp.exponent + 1;
  return count;
}

std::int64_t divisor_count(std::int64_t x) { return divisor_count(factorize(x)); }

std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> out{1};
  out.reserve(static_cast<std::size_t>(divisor_count(f)));
  for (const PrimePower& pp : f.factors) {
    const std::size_t existing = out.size();
    std::int64_t power = 1;
    for (std::int32_t e = 0; e < pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FactorPair> divisor_pairs(const Factorization& f) {
  std::vector<FactorPair> pairs;
  for (std::int64_t d : divisors(f)) {
    if (d > f.value / d) break;
    pairs.push_back({d, f.value / d});
  }
  return pairs;
}

std::vector<FactorPair> divisor_pairs(std::int64_t x) { return divisor_pairs(factorize(x)); }

double divisor_bound(std::int64_t x, double epsilon) {
  if (x < 16) {
    throw std::invalid_argument("divisor_bound: requires x >= 16 (ln ln x must exceed 1)");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("divisor_bound: epsilon must be positive");
  }
  const double lx = std::log(static_cast<double>(x));
  const double exponent = (1.0 + epsilon) * std::log(2.0) / std::log(lx);
  return std::pow(static_cast<double>(x), exponent);
}

SpfSieve::SpfSieve(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfSieve: limit must be at least 2");
  if (limit > UINT32_MAX) throw std::invalid_argument("SpfSieve: limit exceeds 32-bit range");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i) {
      if (spf_[static_cast<std::size_t>(j)] == 0) {
        spf_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::int64_t SpfSieve::smallest_factor(std::int64_t x) const {
  if (x < 2 || x > limit_) throw std::invalid_argument("SpfSieve: value outside table");
  return spf_[static_cast<std::size_t>(x)];
}

Factorization SpfSieve::factorize(std::int64_t x) const {
  require_positive(x, "SpfSieve::factorize");
  if (x > limit_) throw std::invalid_argument("SpfSieve: value outside table");
  Factorization f;
  f.value = x;
  while (x > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(x)];
    std::int32_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

std::int64_t SpfSieve::divisor_count(std::int64_t x) const {
  return prodset::divisor_count(factorize(x));
}

}  // namespace prodset
