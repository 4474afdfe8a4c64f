#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace duadic {

/// Full residue ring Z_N (cyclic codes) or the odd residues O_{2n} of
/// Z_{2n} (negacyclic codes).
enum class Universe { full, odd };

/// Partition of the universe into orbits under i -> qhat * i mod N.
class CosetSystem {
public:
    CosetSystem(std::uint32_t N, std::uint64_t qhat, Universe universe);

    [[nodiscard]] std::uint32_t N() const noexcept { return N_; }
    /// The multiplier base as given (not reduced), e.g. q or q^2.
    [[nodiscard]] std::uint64_t qhat() const noexcept { return qhat_; }
    [[nodiscard]] Universe universe() const noexcept { return universe_; }
    /// Cosets sorted internally, ordered by smallest member.
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& cosets() const noexcept { return cosets_; }
    [[nodiscard]] bool in_universe(std::uint32_t r) const noexcept {
        return r < N_ && (universe_ == Universe::full || (r & 1U) == 1U);
    }
    /// Index into cosets() or -1 for residues outside the universe.
    [[nodiscard]] int coset_index(std::uint32_t r) const noexcept { return r < N_ ? coset_of_[r] : -1; }
    [[nodiscard]] std::vector<std::uint32_t> universe_members() const;
    [[nodiscard]] std::size_t universe_size() const noexcept {
        return universe_ == Universe::full ? N_ : N_ / 2;
    }

private:
    std::uint32_t N_;
    std::uint64_t qhat_;
    Universe universe_;
    std::vector<std::vector<std::uint32_t>> cosets_;
    std::vector<int> coset_of_;
};

using CosetSystemPtr = std::shared_ptr<const CosetSystem>;

CosetSystemPtr build_cosets(std::uint32_t N, std::uint64_t qhat, Universe universe);

/// A union of whole cosets of one system; members sorted ascending.
class DefiningSet {
public:
    /// Throws NotUnionOfCosets if members is not closed under the system.
    DefiningSet(CosetSystemPtr system, std::vector<std::uint32_t> members);

    static DefiningSet empty(CosetSystemPtr system);
    static DefiningSet universe(CosetSystemPtr system);
    /// Union of the cosets containing each given residue.
    static DefiningSet closure(CosetSystemPtr system, const std::vector<std::uint32_t>& seeds);

    [[nodiscard]] const CosetSystemPtr& system() const noexcept { return system_; }
    [[nodiscard]] const std::vector<std::uint32_t>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool contains(std::uint32_t r) const;

    [[nodiscard]] DefiningSet complement() const;
    [[nodiscard]] DefiningSet unite(const DefiningSet& other) const;

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
        return a.members_ == b.members_ && a.system_->N() == b.system_->N() &&
               a.system_->universe() == b.system_->universe();
    }

    [[nodiscard]] std::string to_string() const;

private:
    CosetSystemPtr system_;
    std::vector<std::uint32_t> members_;
};

struct MultiplierImage {
    std::vector<std::uint32_t> members;  // sorted
    bool coset_closed = false;
};

/// {s * i mod N : i in T}. Throws NotCoprime. s may be negative.
MultiplierImage apply_multiplier_raw(const DefiningSet& T, long long s);

/// As apply_multiplier_raw but requires coset closure (NotUnionOfCosets).
DefiningSet apply_multiplier(const DefiningSet& T, long long s);

/// universe \ (-1)T
DefiningSet euclidean_dual_set(const DefiningSet& T);

/// universe \ (-q)T, where the code field has order q^2.
DefiningSet hermitian_dual_set(const DefiningSet& T, std::uint64_t q);

enum class SplittingKind { typeI, typeII, cyclic };
enum class SplittingDemand { any, typeI, typeII };

/// S1 | S2 | X partition of the universe with mu_s swapping S1 and S2.
/// Kind `cyclic` is the cyclic-universe convention X = {0}.
struct Splitting {
    CosetSystemPtr system;
    long long s = 0;
    DefiningSet S1;
    DefiningSet S2;
    DefiningSet X;
    SplittingKind kind = SplittingKind::typeI;
};

/// Greedy pairing of each coset C with mu_s(C) in coset order. Fixed
/// cosets go to X. Returns nullopt when X does not have the duadic shape
/// (empty or {n/2, 3n/2} for odd universes, {0} for full ones) or does
/// not match the demanded kind. Throws NotCoprime.
std::optional<Splitting> find_splitting(const CosetSystemPtr& system, long long s,
                                        SplittingDemand demand = SplittingDemand::any);

/// True iff the three splitting axioms hold exactly.
bool splitting_axioms_hold(const Splitting& sp);

/// Longest run of consecutive residues (step 1 for Z_N, step 2 for odd
/// residues), wrap-around included. Certifies distance >= run + 1.
std::uint32_t longest_consecutive_run(const DefiningSet& T);

struct ProgressionRun {
    std::uint32_t length = 0;
    std::uint32_t start = 0;
    std::uint32_t step = 1;  // additive step in residues
};

/// Longest arithmetic progression inside T whose step c (2c for odd
/// universes) is coprime to the code length: the general BCH window.
ProgressionRun longest_progression(const DefiningSet& T);

}  // namespace duadic
