#include "duadic/extension.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <sstream>

#include "duadic/numtheory.hpp"

namespace duadic {

using boost::multiprecision::cpp_int;

SubfieldEmbedding::SubfieldEmbedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->p() != ext_->p() || ext_->m() % base_->m() != 0) {
        throw Error(Errc::NotSubfield, "GF(" + std::to_string(base_->q()) + ") is not a subfield of GF(" +
                                           std::to_string(ext_->q()) + ")");
    }
    const std::uint32_t q = base_->q();
    to_ext_.assign(q, 0);
    if (base_ == ext_ || base_->m() == 1) {
        // Prime-field elements are the constant digit in every representation.
        for (Elem a = 0; a < q; ++a) to_ext_[a] = a;
    } else {
        const auto& f = base_->modulus();
        const Field& E = *ext_;
        auto eval_modulus = [&](Elem x) {
            Elem acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = E.add(E.mul(acc, x), static_cast<Elem>(f[i]));
            return acc;
        };
        const std::uint64_t step = (static_cast<std::uint64_t>(E.q()) - 1) / (q - 1);
        std::optional<Elem> rho;
        for (std::uint64_t u = 1; u < q - 1 && !rho; ++u) {
            const Elem cand = E.exp(step * u);
            if (eval_modulus(cand) == 0) rho = cand;
        }
        if (!rho) throw Error(Errc::NotSubfield, "base modulus has no root in the extension");
        std::vector<Elem> powers(base_->m());
        powers[0] = 1;
        for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = E.mul(powers[i - 1], *rho);
        for (Elem a = 0; a < q; ++a) {
            const auto c = base_->coeffs(a);
            Elem acc = 0;
            for (std::size_t i = 0; i < c.size(); ++i) acc = E.add(acc, E.mul(static_cast<Elem>(c[i]), powers[i]));
            to_ext_[a] = acc;
        }
    }
    from_ext_.assign(ext_->q(), -1);
    for (Elem a = 0; a < q; ++a) from_ext_[to_ext_[a]] = static_cast<std::int32_t>(a);
}

std::optional<Elem> SubfieldEmbedding::from_ext(Elem b) const {
    if (b >= from_ext_.size() || from_ext_[b] < 0) return std::nullopt;
    return static_cast<Elem>(from_ext_[b]);
}

std::shared_ptr<const SubfieldEmbedding> embedding(const FieldPtr& base, const FieldPtr& ext) {
    static std::mutex mutex;
    static std::map<std::pair<const Field*, const Field*>, std::shared_ptr<const SubfieldEmbedding>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{base.get(), ext.get()}];
    if (!slot) slot = std::make_shared<const SubfieldEmbedding>(base, ext);
    return slot;
}

Poly minimal_poly(const FieldPtr& base, const FieldPtr& ext, Elem beta) {
    const auto emb = embedding(base, ext);
    const Field& E = *ext;
    // prod (x - beta^(q^j)) with coefficients in ext, highest degree last.
    std::vector<Elem> acc{1};
    Elem conj = beta;
    do {
        std::vector<Elem> next(acc.size() + 1, 0);
        const Elem neg = E.neg(conj);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = E.add(next[i + 1], acc[i]);
            next[i] = E.add(next[i], E.mul(acc[i], neg));
        }
        acc = std::move(next);
        conj = E.pow(conj, base->q());
    } while (conj != beta);
    std::vector<Elem> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        const auto b = emb->from_ext(acc[i]);
        if (!b) throw Error(Errc::CoefficientNotInSubfield, "minimal polynomial coefficient outside the subfield");
        out[i] = *b;
    }
    return Poly(base, std::move(out));
}

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& h) { return divmod(a * b, h).second; }

Poly powmod(Poly a, std::uint64_t e, const Poly& h) {
    Poly r = divmod(Poly::constant(a.field(), 1), h).second;
    a = divmod(a, h).second;
    while (e > 0) {
        if (e & 1U) r = mulmod(r, a, h);
        a = mulmod(a, a, h);
        e >>= 1U;
    }
    return r;
}

Poly powmod(Poly a, cpp_int e, const Poly& h) {
    Poly r = divmod(Poly::constant(a.field(), 1), h).second;
    a = divmod(a, h).second;
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, a, h);
        a = mulmod(a, a, h);
        e >>= 1;
    }
    return r;
}

bool is_one(const Poly& a) { return a.coeffs().size() == 1 && a.coeffs()[0] == 1; }

}  // namespace

bool is_irreducible_over(const Poly& h) {
    if (h.degree() < 1) return false;
    if (h.degree() == 1) return true;
    const auto& F = h.field();
    const Poly hm = h.monic();
    const auto s = static_cast<std::uint32_t>(hm.degree());
    const Poly y = Poly::monomial(F, 1);
    std::vector<Poly> frob{y};  // frob[k] = y^(q^k) mod h
    for (std::uint32_t k = 1; k <= s; ++k) frob.push_back(powmod(frob.back(), F->q(), hm));
    if (!(divmod(frob[s] - y, hm).second.is_zero())) return false;
    for (auto l : nt::prime_divisors(s)) {
        if (gcd(frob[s / l] - y, hm).degree() != 0) return false;
    }
    return true;
}

Poly first_irreducible_over(const FieldPtr& base, std::uint32_t s) {
    if (s == 0) throw Error(Errc::InvalidArgument, "degree must be positive");
    if (s == 1) return Poly::monomial(base, 1);
    const std::uint32_t q = base->q();
    std::vector<Elem> c(s + 1, 0);
    c[s] = 1;
    c[0] = 1;  // c0 = 0 is divisible by x
    while (true) {
        if (is_irreducible_over(Poly(base, c))) return Poly(base, c);
        // Odometer with c_{s-1} fastest, c0 slowest.
        std::size_t i = s;
        while (i-- > 0) {
            if (++c[i] < q) break;
            c[i] = 0;
            if (i == 0) throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
        }
    }
}

CyclotomicExtension::CyclotomicExtension(FieldPtr base, std::uint32_t N)
    : base_(std::move(base)), N_(N), s_(0), f_(base_) {
    if (N == 0 || nt::gcd(N, base_->q()) != 1) {
        throw Error(Errc::NotCoprime, "root order " + std::to_string(N) + " not coprime to q");
    }
    s_ = static_cast<std::uint32_t>(nt::mult_order(base_->q(), N));
    const auto Q = nt::checked_pow(base_->q(), s_);
    if (Q && *Q <= kMaxFieldSize) {
        table_backed_ = true;
        ext_ = make_field(base_->p(), static_cast<std::uint64_t>(base_->m()) * s_);
        root_log_ = (ext_->q() - 1) / N;
        f_ = minimal_poly(base_, ext_, ext_->exp(root_log_));
        return;
    }
    const Poly h = first_irreducible_over(base_, s_);
    cpp_int order = 1;
    for (std::uint32_t i = 0; i < s_; ++i) order *= base_->q();
    order -= 1;
    const cpp_int cofactor = order / N;
    const auto primes = nt::prime_divisors(N);
    std::optional<Poly> beta;
    for (std::uint64_t v = 2; !beta; ++v) {
        std::vector<Elem> g;
        for (std::uint64_t x = v; x > 0; x /= base_->q()) g.push_back(static_cast<Elem>(x % base_->q()));
        const Poly cand = powmod(Poly(base_, g), cofactor, h);
        const bool exact = std::all_of(primes.begin(), primes.end(),
                                       [&](std::uint64_t l) { return !is_one(powmod(cand, N / l, h)); });
        if (exact) beta = cand;
    }
    // Minimal polynomial of beta via its Frobenius orbit in base[y]/(h).
    std::vector<Poly> acc{Poly::constant(base_, 1)};
    Poly conj = *beta;
    for (std::uint32_t j = 0; j < s_; ++j) {
        std::vector<Poly> next(acc.size() + 1, Poly(base_));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = next[i + 1] + acc[i];
            next[i] = next[i] - mulmod(acc[i], conj, h);
        }
        acc = std::move(next);
        conj = powmod(conj, base_->q(), h);
    }
    std::vector<Elem> out;
    for (const auto& c : acc) {
        if (c.degree() > 0) throw Error(Errc::CoefficientNotInSubfield, "tower minimal polynomial outside base");
        out.push_back(c.coeff(0));
    }
    f_ = Poly(base_, std::move(out));
}

Poly CyclotomicExtension::reduce(const Poly& a) const { return divmod(a, f_).second; }

Poly CyclotomicExtension::mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

Poly CyclotomicExtension::root_power(std::uint64_t i) const {
    return powmod(Poly::monomial(base_, 1), i % N_, f_);
}

Poly CyclotomicExtension::product_of_linear_factors(const std::vector<std::uint32_t>& exponents) const {
    std::vector<Poly> acc{Poly::constant(base_, 1)};
    for (std::uint32_t j : exponents) {
        const Poly r = root_power(j);
        std::vector<Poly> next(acc.size() + 1, Poly(base_));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = next[i + 1] + acc[i];
            next[i] = next[i] - mul(acc[i], r);
        }
        acc = std::move(next);
    }
    std::vector<Elem> out;
    out.reserve(acc.size());
    for (const auto& c : acc) {
        if (c.degree() > 0) {
            throw Error(Errc::CoefficientNotInSubfield, "exponent set is not closed under Frobenius");
        }
        out.push_back(c.coeff(0));
    }
    return Poly(base_, std::move(out));
}

std::optional<Elem> CyclotomicExtension::root_in_base() const {
    if (s_ != 1) return std::nullopt;
    return root_power(1).coeff(0);
}

std::string CyclotomicExtension::describe() const {
    std::ostringstream os;
    os << "GF(" << base_->q() << "^" << s_ << ")";
    if (table_backed_) {
        os << " = GF(" << ext_->q() << "), root = w^" << root_log_;
    } else {
        os << " = GF(" << base_->q() << ")[y]/(" << f_.to_string() << "), root = y";
    }
    return os.str();
}

CyclotomicExtensionPtr cyclotomic_extension(const FieldPtr& base, std::uint32_t N) {
    static std::mutex mutex;
    static std::map<std::pair<const Field*, std::uint32_t>, CyclotomicExtensionPtr> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({base.get(), N});
        if (it != cache.end()) return it->second;
    }
    auto ext = std::make_shared<const CyclotomicExtension>(base, N);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(base.get(), N), std::move(ext)).first->second;
}

}  // namespace duadic
