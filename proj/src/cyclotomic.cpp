#include "duadic/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "duadic/error.hpp"
#include "duadic/numtheory.hpp"

namespace duadic {

CosetSystem::CosetSystem(std::uint32_t N, std::uint64_t qhat, Universe universe)
    : N_(N), qhat_(qhat), universe_(universe) {
    if (N == 0) throw Error(Errc::InvalidArgument, "coset modulus must be positive");
    if (universe == Universe::odd && N % 2 != 0) throw Error(Errc::InvalidArgument, "odd universe requires even N");
    if (nt::gcd(qhat % N, N) != 1 && N != 1) {
        throw Error(Errc::NotCoprime, "multiplier base " + std::to_string(qhat) + " not coprime to " + std::to_string(N));
    }
    const std::uint64_t q = qhat % N;
    coset_of_.assign(N, -1);
    for (std::uint32_t r = 0; r < N; ++r) {
        if (!in_universe(r) || coset_of_[r] >= 0) continue;
        std::vector<std::uint32_t> orbit;
        std::uint32_t x = r;
        do {
            orbit.push_back(x);
            coset_of_[x] = static_cast<int>(cosets_.size());
            x = static_cast<std::uint32_t>(nt::mulmod(x, q, N));
        } while (x != r);
        std::sort(orbit.begin(), orbit.end());
        cosets_.push_back(std::move(orbit));
    }
}

std::vector<std::uint32_t> CosetSystem::universe_members() const {
    std::vector<std::uint32_t> out;
    out.reserve(universe_size());
    for (std::uint32_t r = 0; r < N_; ++r) {
        if (in_universe(r)) out.push_back(r);
    }
    return out;
}

CosetSystemPtr build_cosets(std::uint32_t N, std::uint64_t qhat, Universe universe) {
    return std::make_shared<const CosetSystem>(N, qhat, universe);
}

DefiningSet::DefiningSet(CosetSystemPtr system, std::vector<std::uint32_t> members)
    : system_(std::move(system)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    std::vector<std::size_t> hits(system_->cosets().size(), 0);
    for (std::uint32_t r : members_) {
        if (!system_->in_universe(r)) {
            throw Error(Errc::NotUnionOfCosets, "residue " + std::to_string(r) + " outside the universe");
        }
        ++hits[static_cast<std::size_t>(system_->coset_index(r))];
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] != 0 && hits[i] != system_->cosets()[i].size()) {
            throw Error(Errc::NotUnionOfCosets,
                        "coset of " + std::to_string(system_->cosets()[i].front()) + " only partially included");
        }
    }
}

DefiningSet DefiningSet::empty(CosetSystemPtr system) { return {std::move(system), {}}; }

DefiningSet DefiningSet::universe(CosetSystemPtr system) {
    auto members = system->universe_members();
    return {std::move(system), std::move(members)};
}

DefiningSet DefiningSet::closure(CosetSystemPtr system, const std::vector<std::uint32_t>& seeds) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t r : seeds) {
        const int idx = system->coset_index(r % system->N());
        if (idx < 0) throw Error(Errc::NotUnionOfCosets, "residue " + std::to_string(r) + " outside the universe");
        const auto& c = system->cosets()[static_cast<std::size_t>(idx)];
        members.insert(members.end(), c.begin(), c.end());
    }
    return {std::move(system), std::move(members)};
}

bool DefiningSet::contains(std::uint32_t r) const {
    return std::binary_search(members_.begin(), members_.end(), r);
}

DefiningSet DefiningSet::complement() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t r : system_->universe_members()) {
        if (!contains(r)) out.push_back(r);
    }
    return {system_, std::move(out)};
}

DefiningSet DefiningSet::unite(const DefiningSet& other) const {
    if (other.system_->N() != system_->N() || other.system_->universe() != system_->universe()) {
        throw Error(Errc::InvalidArgument, "defining sets from different universes");
    }
    std::vector<std::uint32_t> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return {system_, std::move(out)};
}

std::string DefiningSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    os << '}';
    return os.str();
}

MultiplierImage apply_multiplier_raw(const DefiningSet& T, long long s) {
    const std::uint32_t N = T.system()->N();
    const std::uint64_t sm = nt::mod(s, N);
    if (N > 1 && nt::gcd(sm, N) != 1) {
        throw Error(Errc::NotCoprime, "multiplier " + std::to_string(s) + " not coprime to " + std::to_string(N));
    }
    MultiplierImage img;
    img.members.reserve(T.size());
    for (std::uint32_t r : T.members()) img.members.push_back(static_cast<std::uint32_t>(nt::mulmod(r, sm, N)));
    std::sort(img.members.begin(), img.members.end());
    try {
        DefiningSet check(T.system(), img.members);
        img.coset_closed = true;
    } catch (const Error&) {
        img.coset_closed = false;
    }
    return img;
}

DefiningSet apply_multiplier(const DefiningSet& T, long long s) {
    auto img = apply_multiplier_raw(T, s);
    return {T.system(), std::move(img.members)};
}

DefiningSet euclidean_dual_set(const DefiningSet& T) { return apply_multiplier(T, -1).complement(); }

DefiningSet hermitian_dual_set(const DefiningSet& T, std::uint64_t q) {
    const std::uint32_t N = T.system()->N();
    return apply_multiplier(T, -static_cast<long long>(q % N)).complement();
}

std::optional<Splitting> find_splitting(const CosetSystemPtr& system, long long s, SplittingDemand demand) {
    const std::uint32_t N = system->N();
    const std::uint64_t sm = nt::mod(s, N);
    if (N > 1 && nt::gcd(sm, N) != 1) {
        throw Error(Errc::NotCoprime, "multiplier " + std::to_string(s) + " not coprime to " + std::to_string(N));
    }
    const auto& cosets = system->cosets();
    std::vector<int> role(cosets.size(), -1);  // 0 = S1, 1 = S2, 2 = X
    std::vector<std::uint32_t> s1;
    std::vector<std::uint32_t> s2;
    std::vector<std::uint32_t> x;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (role[i] >= 0) continue;
        std::vector<std::uint32_t> image;
        for (std::uint32_t r : cosets[i]) image.push_back(static_cast<std::uint32_t>(nt::mulmod(r, sm, N)));
        std::sort(image.begin(), image.end());
        const int j = system->coset_index(image.front());
        if (j < 0 || cosets[static_cast<std::size_t>(j)] != image) return std::nullopt;
        if (static_cast<std::size_t>(j) == i) {
            role[i] = 2;
            x.insert(x.end(), cosets[i].begin(), cosets[i].end());
            continue;
        }
        if (role[static_cast<std::size_t>(j)] >= 0) return std::nullopt;
        role[i] = 0;
        role[static_cast<std::size_t>(j)] = 1;
        s1.insert(s1.end(), cosets[i].begin(), cosets[i].end());
        s2.insert(s2.end(), image.begin(), image.end());
    }
    std::sort(x.begin(), x.end());

    SplittingKind kind{};
    if (system->universe() == Universe::full) {
        if (x != std::vector<std::uint32_t>{0}) return std::nullopt;
        kind = SplittingKind::cyclic;
    } else {
        const std::uint32_t n = N / 2;
        if (x.empty()) {
            kind = SplittingKind::typeI;
        } else if (n % 2 == 0 && x == std::vector<std::uint32_t>{n / 2, 3 * n / 2}) {
            kind = SplittingKind::typeII;
        } else {
            return std::nullopt;
        }
    }
    if (demand == SplittingDemand::typeI && kind != SplittingKind::typeI) return std::nullopt;
    if (demand == SplittingDemand::typeII && kind != SplittingKind::typeII) return std::nullopt;
    return Splitting{system, s, DefiningSet(system, std::move(s1)), DefiningSet(system, std::move(s2)),
                     DefiningSet(system, std::move(x)), kind};
}

bool splitting_axioms_hold(const Splitting& sp) {
    const auto& sys = sp.system;
    std::vector<int> seen(sys->N(), 0);
    for (const auto* part : {&sp.S1, &sp.S2, &sp.X}) {
        for (std::uint32_t r : part->members()) ++seen[r];
    }
    for (std::uint32_t r = 0; r < sys->N(); ++r) {
        if (seen[r] != (sys->in_universe(r) ? 1 : 0)) return false;
    }
    const auto img1 = apply_multiplier_raw(sp.S1, sp.s);
    const auto img2 = apply_multiplier_raw(sp.S2, sp.s);
    const auto imgx = apply_multiplier_raw(sp.X, sp.s);
    if (img1.members != sp.S2.members() || img2.members != sp.S1.members() || imgx.members != sp.X.members()) {
        return false;
    }
    const std::uint32_t n = sys->N() / 2;
    switch (sp.kind) {
        case SplittingKind::typeI: return sp.X.size() == 0;
        case SplittingKind::typeII:
            return sp.X.members() == std::vector<std::uint32_t>{n / 2, 3 * n / 2};
        case SplittingKind::cyclic: return sp.X.members() == std::vector<std::uint32_t>{0};
    }
    return false;
}

namespace {

// Longest circular run of members along the cycle start, start+step, ...
// which visits every universe element exactly once.
ProgressionRun run_along(const DefiningSet& T, std::uint32_t step) {
    const auto& sys = *T.system();
    const std::uint32_t N = sys.N();
    const std::size_t len = sys.universe_size();
    const std::uint32_t first = sys.universe() == Universe::full ? 0 : 1;
    std::vector<std::uint32_t> cycle(len);
    std::uint32_t r = first;
    for (std::size_t i = 0; i < len; ++i) {
        cycle[i] = r;
        r = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r) + step) % N);
    }
    ProgressionRun best{0, 0, step};
    if (T.size() == len) return ProgressionRun{static_cast<std::uint32_t>(len), first, step};
    // Start scanning just after a non-member so wrapped runs are contiguous.
    std::size_t offset = 0;
    while (T.contains(cycle[offset])) ++offset;
    std::uint32_t current = 0;
    std::uint32_t start = 0;
    for (std::size_t k = 1; k <= len; ++k) {
        const std::uint32_t v = cycle[(offset + k) % len];
        if (T.contains(v)) {
            if (current == 0) start = v;
            ++current;
            if (current > best.length) best = {current, start, step};
        } else {
            current = 0;
        }
    }
    return best;
}

}  // namespace

std::uint32_t longest_consecutive_run(const DefiningSet& T) {
    if (T.size() == 0) return 0;
    const std::uint32_t step = T.system()->universe() == Universe::full ? 1 : 2;
    return run_along(T, step % T.system()->N() == 0 ? 0 : step).length;
}

ProgressionRun longest_progression(const DefiningSet& T) {
    if (T.size() == 0) return {};
    const auto& sys = *T.system();
    const std::uint32_t N = sys.N();
    const bool odd = sys.universe() == Universe::odd;
    const std::uint32_t n = odd ? N / 2 : N;
    if (n == 1) return {static_cast<std::uint32_t>(T.size()), T.members().front(), odd ? 2U : 1U};
    ProgressionRun best{};
    for (std::uint32_t c = 1; c < n; ++c) {
        if (nt::gcd(c, n) != 1) continue;
        const auto run = run_along(T, odd ? 2 * c : c);
        if (run.length > best.length) best = run;
    }
    return best;
}

}  // namespace duadic
