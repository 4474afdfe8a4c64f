#include "duadic/code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "duadic/numtheory.hpp"

namespace duadic {

LinearCode::LinearCode(FieldPtr field, Matrix genmat, std::optional<Shift> shift,
                       std::optional<Provenance> provenance, std::optional<ExtensionInfo> extension)
    : field_(std::move(field)),
      genmat_(std::move(genmat)),
      shift_(shift),
      provenance_(std::move(provenance)),
      extension_(std::move(extension)) {
    if (rank(*field_, genmat_) != genmat_.rows) {
        throw Error(Errc::InvalidArgument, "generator matrix does not have full row rank");
    }
}

namespace {

std::uint32_t root_order(std::uint32_t n, Shift a) { return a == Shift::cyclic ? n : 2 * n; }

unsigned resolve_threads(unsigned t) {
    if (t == 0) t = std::max(1U, std::thread::hardware_concurrency());
    return t;
}

}  // namespace

CosetSystemPtr code_coset_system(const Field& field, std::uint32_t n, Shift a) {
    if (n == 0) throw Error(Errc::InvalidArgument, "code length must be positive");
    const std::uint32_t N = root_order(n, a);
    if (nt::gcd(N, field.q()) != 1) {
        throw Error(Errc::NotCoprime, "gcd(" + std::to_string(N) + ", " + std::to_string(field.q()) + ") != 1");
    }
    return build_cosets(N, field.q(), a == Shift::cyclic ? Universe::full : Universe::odd);
}

Factorization factor_xn_minus_a(const FieldPtr& field, std::uint32_t n, Shift a) {
    Factorization out;
    out.system = code_coset_system(*field, n, a);
    out.extension = cyclotomic_extension(field, out.system->N());
    for (const auto& c : out.system->cosets()) {
        out.factors.push_back({c, out.extension->product_of_linear_factors(c)});
    }
    return out;
}

LinearCode code_from_defining_set(const FieldPtr& field, std::uint32_t n, Shift a, const DefiningSet& T) {
    const auto system = code_coset_system(*field, n, a);
    const auto& ts = *T.system();
    if (ts.N() != system->N() || ts.universe() != system->universe() ||
        ts.qhat() % ts.N() != field->q() % ts.N()) {
        throw Error(Errc::NotUnionOfCosets, "defining set " + T.to_string() + " belongs to a different coset system");
    }
    const auto ext = cyclotomic_extension(field, system->N());
    Poly g = Poly::constant(field, 1);
    std::vector<bool> done(system->cosets().size(), false);
    for (auto r : T.members()) {
        const int ci = system->coset_index(r);
        if (ci < 0) throw Error(Errc::NotUnionOfCosets, "residue " + std::to_string(r) + " outside the universe");
        if (done[static_cast<std::size_t>(ci)]) continue;
        done[static_cast<std::size_t>(ci)] = true;
        g = g * ext->product_of_linear_factors(system->cosets()[static_cast<std::size_t>(ci)]);
    }
    const std::size_t k = n - T.size();
    Matrix G(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) G.at(i, i + j) = g.coeffs()[j];
    }
    return LinearCode(field, std::move(G), a, Provenance{T, g, ext});
}

namespace {

Matrix conj_matrix(const Field& f, const Matrix& m, DualKind kind) {
    if (kind == DualKind::euclidean) return m;
    return power_entries(f, m, sqrt_order(f));
}

}  // namespace

LinearCode dual_code(const LinearCode& code, DualKind kind) {
    const Field& f = *code.field();
    // x is orthogonal to every row y iff x * conj(y)^T = 0.
    Matrix K = kernel(f, conj_matrix(f, code.genmat(), kind));
    return LinearCode(code.field(), std::move(K), code.shift());
}

std::optional<OrthogonalityWitness> orthogonality_witness(const LinearCode& code, DualKind kind) {
    const Field& f = *code.field();
    const Matrix g = gram(f, code.genmat(), conj_matrix(f, code.genmat(), kind));
    for (std::size_t i = 0; i < g.rows; ++i) {
        for (std::size_t j = 0; j < g.cols; ++j) {
            if (g.at(i, j) != 0) return OrthogonalityWitness{i, j, g.at(i, j)};
        }
    }
    return std::nullopt;
}

bool is_self_dual(const LinearCode& code, DualKind kind) {
    if (kind == DualKind::hermitian) (void)sqrt_order(*code.field());
    if (2 * code.k() != code.n()) return false;
    return !orthogonality_witness(code, kind).has_value();
}

LinearCode extend_single(const LinearCode& code, Elem gamma) {
    const Field& f = *code.field();
    const Matrix& G = code.genmat();
    Matrix E(G.rows, G.cols + 1);
    for (std::size_t i = 0; i < G.rows; ++i) {
        Elem sum = 0;
        for (std::size_t j = 0; j < G.cols; ++j) {
            E.at(i, j) = G.at(i, j);
            sum = f.add(sum, G.at(i, j));
        }
        E.at(i, G.cols) = f.neg(f.mul(gamma, sum));
    }
    std::optional<ExtensionInfo> info;
    if (code.provenance() && code.shift()) {
        info = ExtensionInfo{ExtensionKind::single, gamma, static_cast<std::uint32_t>(code.n()), *code.shift(),
                             code.provenance()->defining_set};
    }
    return LinearCode(code.field(), std::move(E), std::nullopt, std::nullopt, std::move(info));
}

LinearCode extend_double(const LinearCode& code, Elem gamma) {
    if (code.n() % 2 != 0) {
        throw Error(Errc::LengthNotEven, "double extension needs even length, got " + std::to_string(code.n()));
    }
    const Field& f = *code.field();
    const Matrix& G = code.genmat();
    const std::size_t half = G.cols / 2;
    Matrix E(G.rows, G.cols + 2);
    for (std::size_t i = 0; i < G.rows; ++i) {
        Elem even = 0;
        Elem odd = 0;
        for (std::size_t j = 0; j < G.cols; ++j) E.at(i, j) = G.at(i, j);
        for (std::size_t h = 0; h < half; ++h) {
            const bool minus = (h % 2) == 1;
            const Elem a = G.at(i, 2 * h);
            const Elem b = G.at(i, 2 * h + 1);
            even = minus ? f.sub(even, a) : f.add(even, a);
            odd = minus ? f.sub(odd, b) : f.add(odd, b);
        }
        E.at(i, G.cols) = f.mul(gamma, even);
        E.at(i, G.cols + 1) = f.mul(gamma, odd);
    }
    std::optional<ExtensionInfo> info;
    if (code.provenance() && code.shift()) {
        info = ExtensionInfo{ExtensionKind::twin, gamma, static_cast<std::uint32_t>(code.n()), *code.shift(),
                             code.provenance()->defining_set};
    }
    return LinearCode(code.field(), std::move(E), std::nullopt, std::nullopt, std::move(info));
}

std::string method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::exhaustive: return "exhaustive";
        case DistanceMethod::bch_singleton_certificate: return "bch_singleton_certificate";
        case DistanceMethod::information_set_certificate: return "information_set_certificate";
        case DistanceMethod::bounded_only: return "bounded_only";
    }
    return "unknown";
}

namespace {

std::uint32_t bch_of(const DefiningSet& T, std::string* detail, const char* label) {
    const auto run = longest_progression(T);
    if (detail != nullptr) {
        *detail += std::string(label) + " window of " + std::to_string(run.length) + " (start " +
                   std::to_string(run.start) + ", step " + std::to_string(run.step) + ")";
    }
    return run.length + 1;
}

}  // namespace

std::optional<std::uint32_t> bch_lower_bound(const LinearCode& code, std::string* detail) {
    if (code.provenance()) return bch_of(code.provenance()->defining_set, detail, "BCH");
    if (!code.extension()) return std::nullopt;
    const auto& ext = *code.extension();
    const DefiningSet& T = ext.parent_set;
    if (ext.kind == ExtensionKind::twin || ext.gamma == 0 || T.system()->universe() != Universe::full) {
        return bch_of(T, detail, "parent BCH");
    }
    if (T.contains(0)) return bch_of(T, detail, "parent BCH (0 in T)");
    // Words with c(1) = 0 lie in the code with defining set T + {0}; the
    // others gain a nonzero appended coordinate.
    const DefiningSet T0 = T.unite(DefiningSet::closure(T.system(), {0}));
    std::string d0;
    std::string d1;
    const std::uint32_t with0 = bch_of(T0, detail ? &d0 : nullptr, "BCH(T+{0})");
    const std::uint32_t plus1 = bch_of(T, detail ? &d1 : nullptr, "BCH(T)+1") + 1;
    if (detail != nullptr) *detail += "min(" + d0 + "; " + d1 + ")";
    return std::min(with0, plus1);
}

namespace {

struct ExhaustiveBest {
    std::uint32_t weight = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t outer = 0;
    Elem inner = 0;
};

// All q^k - 1 nonzero codewords, grouped by the coefficient s of row 0.
// For a fixed combination b of the other rows, coordinate j of b + s*r is
// zero exactly when s = -b_j / r_j (or always/never when r_j = 0), so one
// pass over the coordinates yields the weights of all q words at once.
ExhaustiveBest exhaustive_range(const Field& f, const Matrix& G, std::uint64_t lo, std::uint64_t hi) {
    const std::size_t n = G.cols;
    const std::size_t k = G.rows;
    const std::uint32_t q = f.q();
    std::vector<Elem> rinv(n, 0);
    for (std::size_t j = 0; j < n; ++j) rinv[j] = G.at(0, j) == 0 ? 0 : f.inv(G.at(0, j));

    std::vector<Elem> digits(k > 0 ? k - 1 : 0, 0);
    std::vector<Elem> base(n, 0);
    {
        std::uint64_t x = lo;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            digits[i] = static_cast<Elem>(x % q);
            x /= q;
            if (digits[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) base[j] = f.add(base[j], f.mul(digits[i], G.at(i + 1, j)));
        }
    }
    std::vector<std::uint32_t> cnt(q, 0);
    std::vector<Elem> touched;
    touched.reserve(n);
    ExhaustiveBest best;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint32_t z0 = 0;
        touched.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (rinv[j] == 0) {
                if (base[j] == 0) ++z0;
                continue;
            }
            const Elem s = f.neg(f.mul(base[j], rinv[j]));
            if (cnt[s]++ == 0) touched.push_back(s);
        }
        // Largest count, smallest s on ties; s = 0 is excluded for the zero outer word.
        const bool zero_outer = idx == 0;
        std::uint32_t maxc = 0;
        Elem arg = std::numeric_limits<Elem>::max();
        for (Elem s : touched) {
            if (zero_outer && s == 0) continue;
            if (cnt[s] > maxc || (cnt[s] == maxc && s < arg)) {
                maxc = cnt[s];
                arg = s;
            }
        }
        if (maxc == 0) {
            // Every allowed s hits no zero; pick the smallest allowed s with count 0.
            arg = zero_outer ? 1 : 0;
            while (arg < q && cnt[arg] != 0) ++arg;
        }
        for (Elem s : touched) cnt[s] = 0;
        if (arg < q) {
            const auto w = static_cast<std::uint32_t>(n - z0 - maxc);
            if (w < best.weight) best = {w, idx, arg};
        }
        if (idx + 1 == hi) break;
        // Odometer over the outer digits with incremental base updates.
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const Elem old = digits[i];
            const Elem nxt = old + 1 == q ? 0 : old + 1;
            digits[i] = nxt;
            const Elem delta = f.sub(nxt, old);
            for (std::size_t j = 0; j < n; ++j) base[j] = f.add(base[j], f.mul(delta, G.at(i + 1, j)));
            if (nxt != 0) break;
        }
    }
    return best;
}

std::vector<Elem> codeword_of(const Field& f, const Matrix& G, std::uint64_t outer, Elem inner) {
    std::vector<Elem> c(G.cols, 0);
    std::vector<Elem> msg(G.rows, 0);
    msg[0] = inner;
    for (std::size_t i = 1; i < G.rows; ++i) {
        msg[i] = static_cast<Elem>(outer % f.q());
        outer /= f.q();
    }
    for (std::size_t i = 0; i < G.rows; ++i) {
        if (msg[i] == 0) continue;
        for (std::size_t j = 0; j < G.cols; ++j) c[j] = f.add(c[j], f.mul(msg[i], G.at(i, j)));
    }
    return c;
}

ExhaustiveBest exhaustive(const Field& f, const Matrix& G, unsigned threads) {
    std::uint64_t outer_total = 1;
    for (std::size_t i = 1; i < G.rows; ++i) outer_total *= f.q();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, outer_total / 64)));
    if (threads <= 1) return exhaustive_range(f, G, 0, outer_total);
    std::vector<ExhaustiveBest> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = outer_total * t / threads;
        const std::uint64_t hi = outer_total * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] { parts[t] = exhaustive_range(f, G, lo, hi); });
    }
    for (auto& th : pool) th.join();
    ExhaustiveBest best;
    for (const auto& p : parts) {
        if (p.weight < best.weight) best = p;  // parts are in index order, so ties keep the earliest
    }
    return best;
}

// Depth-first search over column subsets of size <= k in lexicographic
// order, keeping an echelon basis of the chosen columns. Returns the first
// dependent subset found, or nullopt when every k columns are independent.
class ColumnSearch {
public:
    // node_cap = 0 means unlimited.
    ColumnSearch(const Field& f, const Matrix& G, std::uint64_t node_cap)
        : f_(f), G_(G), k_(G.rows), n_(G.cols), cap_(node_cap) {}

    std::optional<std::vector<std::size_t>> run(std::size_t first, const std::atomic<std::size_t>& stop_at) {
        basis_.clear();
        pivots_.clear();
        chosen_.clear();
        stop_ = &stop_at;
        first_ = first;
        nodes_ = 0;
        truncated_ = false;
        if (!push(first)) return chosen_;
        if (dfs(first + 1)) return chosen_;
        return std::nullopt;
    }

    [[nodiscard]] bool truncated() const noexcept { return truncated_; }

private:
    bool push(std::size_t col) {
        std::vector<Elem> v(k_);
        for (std::size_t i = 0; i < k_; ++i) v[i] = G_.at(i, col);
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Elem c = v[pivots_[b]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < k_; ++i) v[i] = f_.sub(v[i], f_.mul(c, basis_[b][i]));
        }
        chosen_.push_back(col);
        std::size_t piv = 0;
        while (piv < k_ && v[piv] == 0) ++piv;
        if (piv == k_) return false;
        const Elem inv = f_.inv(v[piv]);
        for (auto& x : v) x = f_.mul(x, inv);
        basis_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    void pop() {
        chosen_.pop_back();
        basis_.pop_back();
        pivots_.pop_back();
    }

    // true when a dependent subset was found (left in chosen_).
    bool dfs(std::size_t from) {
        if (chosen_.size() == k_) return false;
        if (stop_->load(std::memory_order_relaxed) < first_) return false;
        const std::size_t need = k_ - chosen_.size();
        for (std::size_t c = from; c + need <= n_; ++c) {
            if (cap_ != 0 && ++nodes_ > cap_) {
                truncated_ = true;
                return false;
            }
            if (!push(c)) return true;
            if (dfs(c + 1)) return true;
            pop();
        }
        return false;
    }

    const Field& f_;
    const Matrix& G_;
    std::size_t k_;
    std::size_t n_;
    std::vector<std::vector<Elem>> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> chosen_;
    const std::atomic<std::size_t>* stop_ = nullptr;
    std::size_t first_ = 0;
    std::uint64_t cap_ = 0;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;
};

struct ColumnSearchResult {
    std::optional<std::vector<std::size_t>> dependent;
    bool complete = true;  // false when some task hit its node cap
};

// Each task (first column) is searched independently and in a fixed order,
// so the outcome does not depend on the thread count even when capped.
ColumnSearchResult find_dependent_columns(const Field& f, const Matrix& G, unsigned threads, std::uint64_t node_cap) {
    const std::size_t tasks = G.cols - G.rows + 1;
    std::vector<char> truncated(tasks, 0);
    std::atomic<std::size_t> next{0};
    // Smallest first column with a dependent subset; later tasks stop early.
    std::atomic<std::size_t> found{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<std::vector<std::size_t>>> results(tasks);
    auto worker = [&] {
        ColumnSearch search(f, G, node_cap);
        for (std::size_t t = next++; t < tasks; t = next++) {
            if (found.load() < t) break;
            auto r = search.run(t, found);
            truncated[t] = search.truncated() ? 1 : 0;
            if (r) {
                results[t] = std::move(r);
                std::size_t cur = found.load();
                while (t < cur && !found.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    ColumnSearchResult out;
    const std::size_t t = found.load();
    if (t != std::numeric_limits<std::size_t>::max()) {
        out.dependent = results[t];
    } else {
        out.complete = std::none_of(truncated.begin(), truncated.end(), [](char c) { return c != 0; });
    }
    return out;
}

// Nonzero codeword vanishing on the given columns (which have rank < k once padded to k).
std::vector<Elem> vanishing_codeword(const Field& f, const Matrix& G, std::vector<std::size_t> cols) {
    for (std::size_t c = 0; cols.size() < G.rows && c < G.cols; ++c) {
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    const Matrix S = select_columns(G, cols);
    Matrix St(S.cols, S.rows);
    for (std::size_t i = 0; i < S.rows; ++i) {
        for (std::size_t j = 0; j < S.cols; ++j) St.at(j, i) = S.at(i, j);
    }
    const Matrix K = kernel(f, St);
    std::vector<Elem> c(G.cols, 0);
    for (std::size_t i = 0; i < G.rows; ++i) {
        const Elem m = K.at(0, i);
        if (m == 0) continue;
        for (std::size_t j = 0; j < G.cols; ++j) c[j] = f.add(c[j], f.mul(m, G.at(i, j)));
    }
    return c;
}

}  // namespace

DistanceResult min_distance(const LinearCode& code, const DistanceOptions& opts) {
    DistanceResult r;
    const Field& f = *code.field();
    const auto n = static_cast<std::uint32_t>(code.n());
    const auto k = static_cast<std::uint32_t>(code.k());
    if (k == 0) {
        r.detail = "zero code: distance undefined";
        return r;
    }
    const std::uint32_t singleton = n - k + 1;
    const unsigned threads = resolve_threads(opts.threads);
    std::string bch_detail;
    const auto bch = bch_lower_bound(code, &bch_detail);
    r.lower = bch.value_or(1);
    r.upper = singleton;

    const auto total = nt::checked_pow(f.q(), k);
    if (total && *total - 1 <= opts.budget) {
        const auto best = exhaustive(f, code.genmat(), threads);
        r.method = DistanceMethod::exhaustive;
        r.enumerated = *total - 1;
        r.exact = best.weight;
        r.lower = r.upper = best.weight;
        r.witness = codeword_of(f, code.genmat(), best.outer, best.inner);
        r.detail = "enumerated " + std::to_string(r.enumerated) + " nonzero codewords";
        return r;
    }
    if (bch && *bch >= singleton) {
        r.method = DistanceMethod::bch_singleton_certificate;
        r.exact = singleton;
        r.lower = singleton;
        r.detail = bch_detail + " meets the Singleton bound " + std::to_string(singleton);
        return r;
    }
    const std::uint64_t subsets = nt::binomial_saturated(n, k);
    const std::uint64_t cost = subsets > std::numeric_limits<std::uint64_t>::max() / (std::uint64_t{k} * k)
                                   ? std::numeric_limits<std::uint64_t>::max()
                                   : subsets * k * k;
    const std::uint64_t allowance = opts.budget > std::numeric_limits<std::uint64_t>::max() / opts.information_set_factor
                                        ? std::numeric_limits<std::uint64_t>::max()
                                        : opts.budget * opts.information_set_factor;
    // Beyond the allowance the same search runs with a per-task node cap: it
    // can still exhibit a low-weight codeword but never certifies MDS.
    const bool full = cost <= allowance;
    const std::size_t tasks = n - k + 1;
    const std::uint64_t cap = full ? 0 : std::max<std::uint64_t>(1, allowance / (std::uint64_t{tasks} * k * k));
    const auto search = find_dependent_columns(f, code.genmat(), threads, cap);
    if (!search.dependent && search.complete) {
        r.method = DistanceMethod::information_set_certificate;
        r.exact = singleton;
        r.lower = singleton;
        r.detail = "all " + std::to_string(subsets) + " " + std::to_string(k) + "-column minors are nonsingular";
        return r;
    }
    if (search.dependent) {
        r.witness = vanishing_codeword(f, code.genmat(), *search.dependent);
        r.upper = static_cast<std::uint32_t>(weight(r.witness));
        r.lower = std::min(r.lower, r.upper);
        r.detail = std::string(full ? "" : "capped ") + "column search found a singular subset; codeword of weight " +
                   std::to_string(r.upper);
        if (r.lower == r.upper) {
            r.method = DistanceMethod::information_set_certificate;
            r.exact = r.upper;
            r.detail += " meets " + bch_detail;
            return r;
        }
        r.method = DistanceMethod::bounded_only;
        if (!bch_detail.empty()) r.detail += "; lower bound from " + bch_detail;
        return r;
    }
    r.method = DistanceMethod::bounded_only;
    r.detail = (bch ? "lower bound from " + bch_detail + ", Singleton upper bound" : "Singleton upper bound only") +
               std::string("; column search capped at ") + std::to_string(cap) + " nodes per first column found no singular subset";
    return r;
}

bool is_mds(const LinearCode& code, const DistanceResult& d) {
    if (!d.exact) throw Error(Errc::DistanceNotExact, "distance is only bounded in [" + std::to_string(d.lower) + ", " +
                                                          std::to_string(d.upper) + "]");
    return *d.exact == code.n() - code.k() + 1;
}

bool contains_codeword(const LinearCode& code, std::span<const Elem> word) {
    if (word.size() != code.n()) return false;
    Matrix w(1, word.size());
    std::copy(word.begin(), word.end(), w.data.begin());
    return rank(*code.field(), vstack(code.genmat(), w)) == code.k();
}

}  // namespace duadic
