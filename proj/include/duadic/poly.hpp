#pragma once

#include <string>
#include <utility>
#include <vector>

#include "duadic/field.hpp"

namespace duadic {

/// Univariate polynomial over a finite field, constant term first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    explicit Poly(FieldPtr field, std::vector<Elem> coeffs = {});

    static Poly monomial(FieldPtr field, std::size_t degree, Elem c = 1);
    static Poly constant(FieldPtr field, Elem c);
    /// x^n - a for a in F (a = 1 or a = -1 in practice).
    static Poly xn_minus(FieldPtr field, std::size_t n, Elem a);

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] const std::vector<Elem>& coeffs() const noexcept { return c_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] Elem eval(Elem x) const;
    [[nodiscard]] Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    [[nodiscard]] std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// (quotient, remainder); throws DivisionByZero / FieldMismatch.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

enum class PolyOp { add, mul, divmod, gcd };

/// Single dispatch entry point; returns (result, remainder) where the
/// second polynomial is zero except for divmod.
std::pair<Poly, Poly> poly_arith(const Poly& a, const Poly& b, PolyOp op);

}  // namespace duadic
