#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duadic/field.hpp"
#include "duadic/poly.hpp"

namespace duadic {

/// Field embedding GF(p^m) -> GF(p^M), m | M. The generator x of the base
/// modulus is sent to the root of that modulus of the form
/// (omega_ext^((Q-1)/(q-1)))^u with the smallest u.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr base, FieldPtr ext);

    [[nodiscard]] const FieldPtr& base() const noexcept { return base_; }
    [[nodiscard]] const FieldPtr& ext() const noexcept { return ext_; }
    [[nodiscard]] Elem to_ext(Elem a) const { return to_ext_[a]; }
    /// nullopt when the element does not lie in the embedded subfield.
    [[nodiscard]] std::optional<Elem> from_ext(Elem b) const;

private:
    FieldPtr base_;
    FieldPtr ext_;
    std::vector<Elem> to_ext_;
    std::vector<std::int32_t> from_ext_;
};

std::shared_ptr<const SubfieldEmbedding> embedding(const FieldPtr& base, const FieldPtr& ext);

/// Minimal polynomial over base of beta in ext: the product of
/// (x - beta^(q^j)) over the Frobenius orbit. Throws NotSubfield, or
/// CoefficientNotInSubfield on an embedding inconsistency.
Poly minimal_poly(const FieldPtr& base, const FieldPtr& ext, Elem beta);

/// GF(q^s) = base[y]/(f) where f is the minimal polynomial of a canonical
/// primitive N-th root of unity, so that y itself is that root. When
/// GF(q^s) fits in a table-backed field the root is omega_ext^((q^s-1)/N);
/// otherwise f is derived from the first element of a lexicographically
/// first irreducible degree-s extension whose ((q^s-1)/N)-th power has
/// exact order N.
class CyclotomicExtension {
public:
    CyclotomicExtension(FieldPtr base, std::uint32_t N);

    [[nodiscard]] const FieldPtr& base() const noexcept { return base_; }
    [[nodiscard]] std::uint32_t N() const noexcept { return N_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return s_; }
    [[nodiscard]] const Poly& modulus() const noexcept { return f_; }
    [[nodiscard]] bool table_backed() const noexcept { return table_backed_; }
    /// Populated when table_backed: the extension field and log of the root.
    [[nodiscard]] const FieldPtr& table_field() const noexcept { return ext_; }
    [[nodiscard]] std::uint64_t root_log() const noexcept { return root_log_; }

    /// y^i reduced mod f.
    [[nodiscard]] Poly root_power(std::uint64_t i) const;
    /// prod_{j in exponents} (x - y^j), mapped back to the base field.
    [[nodiscard]] Poly product_of_linear_factors(const std::vector<std::uint32_t>& exponents) const;
    /// The root itself when it lies in the base field (degree 1).
    [[nodiscard]] std::optional<Elem> root_in_base() const;

    [[nodiscard]] std::string describe() const;

private:
    [[nodiscard]] Poly reduce(const Poly& a) const;
    [[nodiscard]] Poly mul(const Poly& a, const Poly& b) const;

    FieldPtr base_;
    std::uint32_t N_;
    std::uint32_t s_;
    Poly f_;
    bool table_backed_ = false;
    FieldPtr ext_;
    std::uint64_t root_log_ = 0;
};

using CyclotomicExtensionPtr = std::shared_ptr<const CyclotomicExtension>;

/// Cached per (base field, N).
CyclotomicExtensionPtr cyclotomic_extension(const FieldPtr& base, std::uint32_t N);

/// Canonical irreducible monic polynomial of degree s over base: the first
/// in lexicographic order of (c0, ..., c_{s-1}) with c0 compared first.
Poly first_irreducible_over(const FieldPtr& base, std::uint32_t s);

/// Rabin's test over an arbitrary finite field.
bool is_irreducible_over(const Poly& h);

}  // namespace duadic
