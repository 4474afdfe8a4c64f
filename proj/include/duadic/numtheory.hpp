#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

// Integer helpers shared by every module. All arguments are small enough
// that 128-bit intermediates never overflow.
namespace duadic::nt {

using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b) noexcept;
u64 lcm(u64 a, u64 b) noexcept;
u64 mulmod(u64 a, u64 b, u64 m) noexcept;
u64 powmod(u64 base, u64 exp, u64 m) noexcept;

/// Reduce a signed integer into [0, m).
u64 mod(long long a, u64 m) noexcept;

bool is_prime(u64 n) noexcept;

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);

/// Least k >= 1 with a^k == 1 (mod m). Requires gcd(a, m) == 1 and m >= 1.
u64 mult_order(u64 a, u64 m);

/// Exponent of the largest power of p dividing n (n > 0).
unsigned valuation(u64 n, u64 p) noexcept;

/// Integer power with overflow detection.
std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept;

struct PrimePower {
    u64 prime;
    unsigned exponent;
    u64 value;
};

/// q = p^e with p prime, or nullopt.
std::optional<PrimePower> as_prime_power(u64 q);

/// Parses "961" or "31^2". Throws Error(ParseError) on malformed input.
u64 parse_power(std::string_view text);

/// Binomial coefficient saturating at UINT64_MAX.
u64 binomial_saturated(u64 n, u64 k) noexcept;

}  // namespace duadic::nt
