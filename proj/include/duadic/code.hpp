#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duadic/cyclotomic.hpp"
#include "duadic/extension.hpp"
#include "duadic/field.hpp"
#include "duadic/matrix.hpp"
#include "duadic/poly.hpp"

namespace duadic {

/// Constacyclic constant a in x^n - a.
enum class Shift : int { cyclic = 1, negacyclic = -1 };

/// Where a constacyclic code came from: its defining set, generator
/// polynomial and the root of unity fixing the exponent convention.
struct Provenance {
    DefiningSet defining_set;
    Poly generator;
    CyclotomicExtensionPtr extension;
};

enum class ExtensionKind { single, twin };

/// Record of an extension map applied to a constacyclic parent code.
/// `single` appends -gamma * sum(c); `twin` appends the alternating sums
/// over even positions then odd positions, both scaled by gamma.
struct ExtensionInfo {
    ExtensionKind kind = ExtensionKind::single;
    Elem gamma = 0;
    std::uint32_t parent_n = 0;
    Shift parent_shift = Shift::cyclic;
    DefiningSet parent_set;
};

class LinearCode {
public:
    /// Throws InvalidArgument when genmat does not have full row rank.
    LinearCode(FieldPtr field, Matrix genmat, std::optional<Shift> shift = std::nullopt,
               std::optional<Provenance> provenance = std::nullopt,
               std::optional<ExtensionInfo> extension = std::nullopt);

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t n() const noexcept { return genmat_.cols; }
    [[nodiscard]] std::size_t k() const noexcept { return genmat_.rows; }
    [[nodiscard]] const Matrix& genmat() const noexcept { return genmat_; }
    [[nodiscard]] const std::optional<Shift>& shift() const noexcept { return shift_; }
    [[nodiscard]] const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
    [[nodiscard]] const std::optional<ExtensionInfo>& extension() const noexcept { return extension_; }

private:
    FieldPtr field_;
    Matrix genmat_;
    std::optional<Shift> shift_;
    std::optional<Provenance> provenance_;
    std::optional<ExtensionInfo> extension_;
};

struct Factor {
    std::vector<std::uint32_t> coset;
    Poly poly;
};

struct Factorization {
    CosetSystemPtr system;
    CyclotomicExtensionPtr extension;
    std::vector<Factor> factors;
};

/// Coset system matching a code of length n over GF(q) with the given shift.
CosetSystemPtr code_coset_system(const Field& field, std::uint32_t n, Shift a);

/// One minimal polynomial per coset; their product is x^n - a.
Factorization factor_xn_minus_a(const FieldPtr& field, std::uint32_t n, Shift a);

/// Generator g = product of minimal polynomials of the cosets in T; rows
/// x^i g for i < n - |T|.
LinearCode code_from_defining_set(const FieldPtr& field, std::uint32_t n, Shift a, const DefiningSet& T);

enum class DualKind { euclidean, hermitian };

/// Kernel computation, independent of provenance.
LinearCode dual_code(const LinearCode& code, DualKind kind);

struct OrthogonalityWitness {
    std::size_t row_a = 0;
    std::size_t row_b = 0;
    Elem inner = 0;
};

/// First pair of generator rows with nonzero (Hermitian) inner product.
std::optional<OrthogonalityWitness> orthogonality_witness(const LinearCode& code, DualKind kind);

/// 2k == n and G conj(G)^T == 0.
bool is_self_dual(const LinearCode& code, DualKind kind);

LinearCode extend_single(const LinearCode& code, Elem gamma);
/// Throws LengthNotEven for odd length.
LinearCode extend_double(const LinearCode& code, Elem gamma);

enum class DistanceMethod { exhaustive, bch_singleton_certificate, information_set_certificate, bounded_only };

std::string method_name(DistanceMethod m);

struct DistanceResult {
    std::optional<std::uint32_t> exact;
    std::uint32_t lower = 0;
    std::uint32_t upper = 0;
    DistanceMethod method = DistanceMethod::bounded_only;
    std::uint64_t enumerated = 0;
    std::string detail;
    /// Codeword attaining `upper` when one was found.
    std::vector<Elem> witness;
};

struct DistanceOptions {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
    /// Information-set certificate is tried when C(n,k) * k^2 <= factor * budget.
    std::uint64_t information_set_factor = 100;
};

/// Lower bound from a BCH window of the code's provenance (plain or extended).
std::optional<std::uint32_t> bch_lower_bound(const LinearCode& code, std::string* detail = nullptr);

DistanceResult min_distance(const LinearCode& code, const DistanceOptions& opts = {});

/// Throws DistanceNotExact unless d is exact.
bool is_mds(const LinearCode& code, const DistanceResult& d);

/// Row-space containment test.
bool contains_codeword(const LinearCode& code, std::span<const Elem> word);

}  // namespace duadic
