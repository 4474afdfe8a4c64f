#include "duadic/numtheory.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <string>

#include "duadic/error.hpp"

namespace duadic {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::OrderNotDividing: return "OrderNotDividing";
        case Errc::NotInSubfield: return "NotInSubfield";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::NotUnionOfCosets: return "NotUnionOfCosets";
        case Errc::NotSubfield: return "NotSubfield";
        case Errc::CoefficientNotInSubfield: return "CoefficientNotInSubfield";
        case Errc::HermitianOnNonSquareField: return "HermitianOnNonSquareField";
        case Errc::LengthNotEven: return "LengthNotEven";
        case Errc::DistanceNotExact: return "DistanceNotExact";
        case Errc::DegenerateN: return "DegenerateN";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::NoGammaSolution: return "NoGammaSolution";
        case Errc::NoSplitting: return "NoSplitting";
        case Errc::InvalidTable: return "InvalidTable";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace nt {

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) noexcept { return a == 0 || b == 0 ? 0 : a / gcd(a, b) * b; }

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

u64 mod(long long a, u64 m) noexcept {
    const long long mm = static_cast<long long>(m);
    long long r = a % mm;
    if (r < 0) r += mm;
    return static_cast<u64>(r);
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

u64 mult_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (gcd(a % m, m) != 1) throw Error(Errc::NotCoprime, "multiplicative order of " + std::to_string(a) +
                                                              " mod " + std::to_string(m));
    // Order divides the exponent of the group, which divides phi(m).
    u64 phi = m;
    for (u64 p : prime_divisors(m)) phi = phi / p * (p - 1);
    u64 ord = phi;
    for (u64 p : prime_divisors(phi)) {
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

unsigned valuation(u64 n, u64 p) noexcept {
    unsigned v = 0;
    while (n > 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u64>::max() / base) return std::nullopt;
        result *= base;
    }
    return result;
}

std::optional<PrimePower> as_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    const auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return PrimePower{f[0].first, f[0].second, q};
}

namespace {

u64 parse_uint(std::string_view text) {
    u64 value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw Error(Errc::ParseError, "not an unsigned integer: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

u64 parse_power(std::string_view text) {
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return parse_uint(text);
    const u64 base = parse_uint(text.substr(0, caret));
    const u64 exp = parse_uint(text.substr(caret + 1));
    const auto value = exp <= 64 ? checked_pow(base, static_cast<unsigned>(exp)) : std::nullopt;
    if (!value) throw Error(Errc::ParseError, "power overflows: '" + std::string(text) + "'");
    return *value;
}

u64 binomial_saturated(u64 n, u64 k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
    }
    return static_cast<u64>(r);
}

}  // namespace nt
}  // namespace duadic
