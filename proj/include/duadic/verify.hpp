#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "duadic/constructions.hpp"
#include "json.hpp"

namespace duadic {

enum class TableId {
    T1_cyclic_euclidean,
    T2_cyclic_hermitian,
    T3_nega_centered,
    T4_nega_allodd_euclidean,
    T5_nega_hermitian,
    T6_len18_primes,
};

std::string table_name(TableId id);
/// Accepts "3", "T3" or the full id "T3_nega_centered". Throws InvalidTable.
TableId parse_table(std::string_view s);

struct TableEntry {
    TableId table = TableId::T1_cyclic_euclidean;
    std::uint64_t n = 0;  // as printed
    std::uint64_t q_base = 0;
    unsigned q_exp = 1;  // 1 unless the cell prints a power such as 31^2
    std::uint64_t q = 0;
    std::string cell;
    Family family = Family::cyclic_euclidean;
};

/// The table data compiled into the library.
const nlohmann::json& embedded_tables();
/// Parses a table document (same schema as data/tables.json). Throws InvalidTable.
std::vector<TableEntry> load_tables(const nlohmann::json& doc);
std::vector<TableEntry> load_tables_file(const std::string& path);

nlohmann::json entry_json(const TableEntry& e);
/// "31^2" or "961".
std::string q_text(const TableEntry& e);

struct VerifyOptions {
    BuildOptions build;
    /// Workers for table sweeps. Each entry then runs its distance search single-threaded.
    unsigned threads = 1;
};

VerificationReport verify_entry(const TableEntry& entry, const VerifyOptions& opts = {});

/// Reports in table order. Throws InvalidTable when no entries carry the id.
std::vector<VerificationReport> verify_table(const std::vector<TableEntry>& entries, TableId id,
                                             const VerifyOptions& opts = {});

struct IntRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // inclusive; lo > hi is empty
};

/// Every prime power q and length n in range with passing hypotheses, ordered
/// by (q, n). Lengths are the unextended code length. HYPOTHESIS_FAIL
/// entries are dropped unless verbose.
std::vector<VerificationReport> search_family(Family family, IntRange q, IntRange n, const VerifyOptions& opts = {},
                                              bool verbose = false);

/// Ordered parallel map over [0, count).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct ReportJsonOptions {
    bool timings = true;
    /// Embed full code records (generator matrix, provenance) and their oracle outcomes.
    bool codes = false;
};

nlohmann::json report_json(const VerificationReport& r, const ReportJsonOptions& opts = {});

/// Self-duality (both kinds where defined) and distance, recomputed from the matrix.
nlohmann::json code_oracles(const LinearCode& code, const DistanceOptions& opts);

/// One aligned line per report followed by per-status counts.
std::string reports_text(const std::vector<VerificationReport>& reports);
nlohmann::json status_counts(const std::vector<VerificationReport>& reports);

}  // namespace duadic
