#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "duadic/error.hpp"

namespace duadic {

/// A field element is stored as the integer value of its coefficient
/// sequence read as a base-p numeral, constant term least significant.
/// The integer order of these values is the canonical element order.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = 1ULL << 20;

/// GF(p^m) with the lexicographically first irreducible monic modulus and
/// the first generator (in canonical element order) as primitive element.
/// Instances are immutable and shared; construct them through make_field.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t m);

    [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] Elem omega() const noexcept { return omega_; }
    /// Monic modulus, constant term first, length m + 1.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    [[nodiscard]] Elem zero() const noexcept { return 0; }
    [[nodiscard]] Elem one() const noexcept { return 1; }

    [[nodiscard]] Elem add(Elem a, Elem b) const noexcept;
    [[nodiscard]] Elem neg(Elem a) const noexcept;
    [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    [[nodiscard]] Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// omega^j for any j >= 0.
    [[nodiscard]] Elem exp(std::uint64_t j) const noexcept { return exp_[j % (q_ - 1)]; }
    /// Discrete log base omega; a must be nonzero.
    [[nodiscard]] std::uint32_t log(Elem a) const;

    /// Image of an integer under Z -> GF(p).
    [[nodiscard]] Elem from_int(long long v) const noexcept;

    [[nodiscard]] std::vector<std::uint32_t> coeffs(Elem a) const;
    [[nodiscard]] Elem from_coeffs(std::span<const std::uint32_t> c) const;

    [[nodiscard]] bool contains(Elem a) const noexcept { return a < q_; }

    /// Human-readable form: prime fields print the integer, extension
    /// fields print "w^j" (or "0").
    [[nodiscard]] std::string format(Elem a) const;

private:
    [[nodiscard]] Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Elem omega_ = 0;
    std::vector<Elem> exp_;            // 2(q-1) entries so log sums need no reduction
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<std::int32_t> zech_;   // zech_[j] = log(1 + omega^j), -1 when that sum is 0
    std::vector<std::uint32_t> pow_p_; // p^i
};

using FieldPtr = std::shared_ptr<const Field>;

/// Cached, deterministic construction. Throws NotPrime / FieldTooLarge.
FieldPtr make_field(std::uint64_t p, std::uint64_t m);

/// Field of order q (q a prime power). Throws NotPrime when q is not a prime power.
FieldPtr make_field_of_order(std::uint64_t q);

/// Value-semantic element bound to its field; the checked public surface.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] Elem value() const noexcept { return value_; }
    [[nodiscard]] std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    [[nodiscard]] FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
    [[nodiscard]] FieldElement inverse() const { return {field_, field_->inv(value_)}; }

private:
    FieldPtr field_;
    Elem value_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Multiplicative order; throws ZeroElement for 0.
std::uint64_t element_order(const Field& field, Elem a);

/// omega^((q-1)/n); throws OrderNotDividing when n does not divide q - 1.
Elem nth_root_of_unity(const Field& field, std::uint64_t n);

/// All square roots of c, ascending in canonical order.
std::vector<Elem> solve_square(const Field& field, Elem c);

/// gamma = omega^j with the smallest j such that gamma^(sqrt(q)+1) == c.
/// Requires an even extension degree and c a nonzero element of the
/// index-2 subfield.
Elem solve_norm(const Field& field2, Elem c);

/// Euler's criterion; throws NotCoprime when p divides x.
bool is_quadratic_residue(long long x, std::uint64_t modp);

/// x -> x^(sqrt q) (Hermitian conjugation). Requires even m.
Elem conjugate(const Field& field, Elem a);

/// sqrt(q) of a field with even extension degree, else throws HermitianOnNonSquareField.
std::uint32_t sqrt_order(const Field& field);

}  // namespace duadic
