#include "duadic/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "duadic/numtheory.hpp"

namespace duadic {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a by a monic b over GF(p); both constant term first.
Digits poly_rem_monic(Digits a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i < db; ++i) {
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const Digits& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Digits& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = *nt::checked_pow(p, static_cast<unsigned>(d));
        Digits g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t x = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            if (is_zero_poly(poly_rem_monic(f, g, p))) return false;
        }
    }
    return true;
}

Digits first_irreducible(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return {0, 1};
    // Coefficient sequences (c0, ..., c_{m-1}) in lexicographic order with c0
    // compared first: c0 is the most significant digit of the counter.
    const std::uint64_t count = *nt::checked_pow(p, m);
    Digits f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t x = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[m - 1 - i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        if (f[0] == 0) continue;
        if (is_irreducible(f, p)) return f;
    }
    throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    const auto q = nt::checked_pow(p, m);
    if (!q || *q > kMaxFieldSize) {
        throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(*q);
    pow_p_.resize(m + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * p;
    modulus_ = first_irreducible(p, m);

    const std::uint64_t order = q_ - 1;
    const auto primes = nt::prime_divisors(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e > 0) {
            if (e & 1U) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1U;
        }
        return r;
    };
    if (q_ == 2) {
        omega_ = 1;
    } else {
        for (Elem g = 2; g < q_; ++g) {
            const bool generator = std::all_of(primes.begin(), primes.end(),
                                               [&](std::uint64_t l) { return slow_pow(g, order / l) != 1; });
            if (generator) {
                omega_ = g;
                break;
            }
        }
    }

    exp_.assign(2 * order, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t j = 0; j < order; ++j) {
        exp_[j] = x;
        exp_[j + order] = x;
        log_[x] = static_cast<std::uint32_t>(j);
        x = slow_mul(x, omega_);
    }

    if (m_ > 1 && p_ != 2) {
        zech_.assign(order, -1);
        for (std::uint64_t j = 0; j < order; ++j) {
            const Elem a = exp_[j];
            const Elem sum = (a % p_) + 1 == p_ ? a - (p_ - 1) : a + 1;
            if (sum != 0) zech_[j] = static_cast<std::int32_t>(log_[sum]);
        }
    }
}

Elem Field::slow_mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    const Digits da = coeffs(a);
    const Digits db = coeffs(b);
    Digits prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
    }
    return from_coeffs(poly_rem_monic(std::move(prod), modulus_, p_));
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t order = q_ - 1;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t d = lb >= la ? lb - la : lb + order - la;
    const std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
}

Elem Field::neg(Elem a) const noexcept {
    if (a == 0 || p_ == 2) return a;
    if (m_ == 1) return p_ - a;
    return exp_[log_[a] + (q_ - 1) / 2];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1));
    return exp_[l % (q_ - 1)];
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "discrete log of zero");
    return log_[a];
}

Elem Field::from_int(long long v) const noexcept { return static_cast<Elem>(nt::mod(v, p_)); }

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    Digits out(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > m_) throw Error(Errc::InvalidArgument, "too many coefficients for field element");
    Elem v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw Error(Errc::InvalidArgument, "coefficient not reduced mod p");
        v += c[i] * pow_p_[i];
    }
    return v;
}

std::string Field::format(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    if (a == 1) return "1";
    return "w^" + std::to_string(log_[a]);
}

FieldPtr make_field(std::uint64_t p, std::uint64_t m) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, FieldPtr> cache;
    if (!nt::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    const auto q = m <= 64 ? nt::checked_pow(p, static_cast<unsigned>(m)) : std::nullopt;
    if (!q || *q > kMaxFieldSize) {
        throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
    std::lock_guard lock(mutex);
    auto& slot = cache[{p, m}];
    if (!slot) slot = std::make_shared<const Field>(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    return slot;
}

FieldPtr make_field_of_order(std::uint64_t q) {
    const auto pp = nt::as_prime_power(q);
    if (!pp) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return make_field(pp->prime, pp->exponent);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_) throw Error(Errc::InvalidArgument, "null field");
    if (!field_->contains(value_)) throw Error(Errc::InvalidArgument, "value out of range for field");
}

namespace {

const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "operands belong to different fields");
    return a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->mul(a.value(), b.value())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->div(a.value(), b.value())};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field() == b.field() && a.value() == b.value();
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw Error(Errc::InvalidArgument, "unknown arithmetic op");
}

std::uint64_t element_order(const Field& field, Elem a) {
    if (a == 0) throw Error(Errc::ZeroElement, "order of zero");
    const std::uint64_t order = field.q() - 1;
    return order / nt::gcd(field.log(a), order);
}

Elem nth_root_of_unity(const Field& field, std::uint64_t n) {
    if (n == 0 || (field.q() - 1) % n != 0) {
        throw Error(Errc::OrderNotDividing,
                    std::to_string(n) + " does not divide " + std::to_string(field.q() - 1));
    }
    return field.exp((field.q() - 1) / n);
}

std::vector<Elem> solve_square(const Field& field, Elem c) {
    if (c == 0) return {0};
    if (field.p() == 2) return {field.pow(c, field.q() / 2)};
    const std::uint32_t l = field.log(c);
    if (l % 2 != 0) return {};
    const Elem r = field.exp(l / 2);
    std::vector<Elem> roots{r, field.neg(r)};
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::uint32_t sqrt_order(const Field& field) {
    if (field.m() % 2 != 0) {
        throw Error(Errc::HermitianOnNonSquareField,
                    "GF(" + std::to_string(field.q()) + ") has odd extension degree");
    }
    return static_cast<std::uint32_t>(*nt::checked_pow(field.p(), field.m() / 2));
}

Elem conjugate(const Field& field, Elem a) { return field.pow(a, sqrt_order(field)); }

Elem solve_norm(const Field& field2, Elem c) {
    const std::uint32_t qs = sqrt_order(field2);
    if (c == 0) throw Error(Errc::ZeroElement, "norm equation with zero right-hand side");
    if (field2.pow(c, qs) != c) throw Error(Errc::NotInSubfield, "right-hand side not in GF(" + std::to_string(qs) + ")");
    // Subfield elements are omega^(k(qs+1)); the smallest exponent is k.
    return field2.exp(field2.log(c) / (qs + 1));
}

bool is_quadratic_residue(long long x, std::uint64_t modp) {
    const std::uint64_t r = nt::mod(x, modp);
    if (nt::gcd(r, modp) != 1) throw Error(Errc::NotCoprime, std::to_string(x) + " shares a factor with " + std::to_string(modp));
    return nt::powmod(r, (modp - 1) / 2, modp) == 1;
}

}  // namespace duadic
