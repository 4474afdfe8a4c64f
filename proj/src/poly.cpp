#include "duadic/poly.hpp"

#include <sstream>

namespace duadic {

namespace {

const FieldPtr& same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    return a.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw Error(Errc::InvalidArgument, "null field");
    trim();
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::xn_minus(FieldPtr field, std::size_t n, Elem a) {
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->neg(a);
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    const Elem li = field_->inv(c_.back());
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], li);
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& f = same_field(a, b);
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    const auto& f = same_field(a, b);
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    const auto& f = same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f->add(v[i + j], f->mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(v));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == 1 && i > 0;
        if (!unit) os << (field_->m() > 1 && i > 0 ? "(" + field_->format(c_[i]) + ")" : field_->format(c_[i]));
        if (i > 0) os << (unit ? "" : "*") << "x";
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const auto& f = same_field(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Elem> r = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    if (r.size() <= db) return {Poly(f), a};
    std::vector<Elem> qc(r.size() - db, 0);
    const Elem li = f->inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
        const Elem coef = f->mul(r[i], li);
        qc[i - db] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f->sub(r[i - db + j], f->mul(coef, b.coeffs()[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(qc)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    same_field(a, b);
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::pair<Poly, Poly> poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return {a + b, Poly(a.field())};
        case PolyOp::mul: return {a * b, Poly(a.field())};
        case PolyOp::divmod: return divmod(a, b);
        case PolyOp::gcd: return {gcd(a, b), Poly(a.field())};
    }
    throw Error(Errc::InvalidArgument, "unknown polynomial op");
}

}  // namespace duadic
