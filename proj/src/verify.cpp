#include "duadic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "duadic/numtheory.hpp"
#include "duadic/serialize.hpp"
#include "duadic_tables_data.hpp"

namespace duadic {

using nlohmann::json;

namespace {

constexpr TableId kTables[] = {TableId::T1_cyclic_euclidean, TableId::T2_cyclic_hermitian,
                               TableId::T3_nega_centered,    TableId::T4_nega_allodd_euclidean,
                               TableId::T5_nega_hermitian,   TableId::T6_len18_primes};

[[noreturn]] void bad_table(const std::string& what) { throw Error(Errc::InvalidTable, what); }

}  // namespace

std::string table_name(TableId id) {
    switch (id) {
        case TableId::T1_cyclic_euclidean: return "T1_cyclic_euclidean";
        case TableId::T2_cyclic_hermitian: return "T2_cyclic_hermitian";
        case TableId::T3_nega_centered: return "T3_nega_centered";
        case TableId::T4_nega_allodd_euclidean: return "T4_nega_allodd_euclidean";
        case TableId::T5_nega_hermitian: return "T5_nega_hermitian";
        case TableId::T6_len18_primes: return "T6_len18_primes";
    }
    return "";
}

TableId parse_table(std::string_view s) {
    if (s.empty()) bad_table("empty table id");
    for (TableId id : kTables) {
        const std::string full = table_name(id);
        if (s == full || s == full.substr(0, 2) || s == full.substr(1, 1)) return id;
    }
    bad_table("unknown table id '" + std::string(s) + "'");
}

const json& embedded_tables() {
    static const json doc = json::parse(kEmbeddedTablesJson);
    return doc;
}

std::vector<TableEntry> load_tables(const json& doc) {
    if (!doc.is_object() || !doc.contains("tables") || !doc["tables"].is_array()) bad_table("missing 'tables' array");
    std::vector<TableEntry> out;
    for (const auto& t : doc["tables"]) {
        if (!t.contains("id") || !t.contains("rows")) bad_table("table without id or rows");
        const TableId id = parse_table(t["id"].get<std::string>());
        std::optional<Family> fam;
        if (t.contains("family") && t["family"].is_string()) fam = parse_family(t["family"].get<std::string>());
        for (const auto& row : t["rows"]) {
            if (!row.contains("n") || !row.contains("q") || !row["q"].is_array()) bad_table("row needs n and a q list");
            std::optional<Family> rf = fam;
            if (row.contains("family")) rf = parse_family(row["family"].get<std::string>());
            if (!rf) bad_table(table_name(id) + ": row without a known family");
            for (const auto& q : row["q"]) {
                TableEntry e;
                e.table = id;
                e.n = row["n"].get<std::uint64_t>();
                e.cell = row.value("cell", "");
                e.family = *rf;
                if (q.is_array()) {
                    if (q.size() != 2) bad_table("power must be [base, exponent]");
                    e.q_base = q[0].get<std::uint64_t>();
                    e.q_exp = q[1].get<unsigned>();
                } else {
                    e.q_base = q.get<std::uint64_t>();
                }
                const auto v = nt::checked_pow(e.q_base, e.q_exp);
                if (!v) bad_table("q overflows");
                e.q = *v;
                out.push_back(e);
            }
        }
    }
    return out;
}

std::vector<TableEntry> load_tables_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_table("cannot open " + path);
    try {
        return load_tables(json::parse(in));
    } catch (const json::exception& e) {
        bad_table(path + ": " + e.what());
    }
}

std::string q_text(const TableEntry& e) {
    return e.q_exp == 1 ? std::to_string(e.q) : std::to_string(e.q_base) + "^" + std::to_string(e.q_exp);
}

json entry_json(const TableEntry& e) {
    return {{"table", table_name(e.table)}, {"cell", e.cell},   {"n", e.n},
            {"q", e.q},                     {"q_printed", q_text(e)}, {"family", family_name(e.family)}};
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

namespace {

json reading_json(const ConstructionRecipe& r) {
    return {{"n", r.base_length}, {"hypotheses_hold", r.hypotheses_hold()}, {"failing", r.failing()}};
}

}  // namespace

VerificationReport verify_entry(const TableEntry& e, const VerifyOptions& opts) {
    const bool extended = e.table == TableId::T1_cyclic_euclidean || e.table == TableId::T2_cyclic_hermitian ||
                          (e.table == TableId::T6_len18_primes && e.family == Family::cyclic_euclidean);
    const std::uint64_t n = extended ? e.n - 1 : e.n;
    const ConstructionRecipe rec = make_recipe(e.family, e.q, n);
    VerificationReport r = run_recipe(rec, opts.build);
    r.entry = entry_json(e);
    if (extended) {
        // The printed length is the extended one; the direct reading is tried too.
        const ConstructionRecipe alt = make_recipe(e.family, e.q, e.n);
        const std::string which = rec.hypotheses_hold() ? (alt.hypotheses_hold() ? "both readings" : "extended reading")
                                                        : (alt.hypotheses_hold() ? "direct reading" : "neither reading");
        r.checks.insert(r.checks.begin(),
                        Check{"length_reading", Outcome::info,
                              "printed n = " + std::to_string(e.n) + " read as extended length n + 1 (underlying n = " +
                                  std::to_string(n) + "); hypotheses match " + which,
                              {{"extended", reading_json(rec)}, {"direct", reading_json(alt)}}});
    }
    r.status = assess(r);
    return r;
}

std::vector<VerificationReport> verify_table(const std::vector<TableEntry>& entries, TableId id,
                                             const VerifyOptions& opts) {
    std::vector<TableEntry> picked;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(picked),
                 [&](const TableEntry& e) { return e.table == id; });
    if (picked.empty()) bad_table(table_name(id) + " has no entries");
    VerifyOptions inner = opts;
    if (picked.size() > 1 && opts.threads != 1) inner.build.distance.threads = 1;
    std::vector<VerificationReport> out(picked.size());
    parallel_for(picked.size(), opts.threads, [&](std::size_t i) { out[i] = verify_entry(picked[i], inner); });
    return out;
}

std::vector<VerificationReport> search_family(Family family, IntRange qr, IntRange nr, const VerifyOptions& opts,
                                              bool verbose) {
    std::vector<ConstructionRecipe> todo;
    const std::uint64_t qhi = std::min<std::uint64_t>(qr.hi, kMaxFieldSize);
    for (std::uint64_t q = std::max<std::uint64_t>(qr.lo, 2); q <= qhi; ++q) {
        if (!nt::as_prime_power(q)) continue;
        for (std::uint64_t n = std::max<std::uint64_t>(nr.lo, 1); n <= nr.hi; ++n) {
            auto rec = make_recipe(family, q, n);
            if (rec.hypotheses_hold() || verbose) todo.push_back(std::move(rec));
        }
    }
    VerifyOptions inner = opts;
    if (todo.size() > 1 && opts.threads != 1) inner.build.distance.threads = 1;
    std::vector<VerificationReport> out(todo.size());
    parallel_for(todo.size(), opts.threads, [&](std::size_t i) { out[i] = run_recipe(todo[i], inner.build); });
    return out;
}

namespace {

std::string kind_name(SplittingKind k) {
    switch (k) {
        case SplittingKind::typeI: return "typeI";
        case SplittingKind::typeII: return "typeII";
        case SplittingKind::cyclic: return "cyclic";
    }
    return "";
}

std::string duality_name(DualKind k) { return k == DualKind::euclidean ? "euclidean" : "hermitian"; }

json distance_summary(const DistanceResult& d) {
    return {{"exact", d.exact ? json(*d.exact) : json(nullptr)},
            {"lower", d.lower},
            {"upper", d.upper},
            {"method", method_name(d.method)}};
}

json oracles_of(const LinearCode& c, const DistanceResult& d) {
    json o;
    o["euclidean_self_dual"] = is_self_dual(c, DualKind::euclidean);
    o["hermitian_self_dual"] = c.field()->m() % 2 == 0 ? json(is_self_dual(c, DualKind::hermitian)) : json(nullptr);
    o["distance"] = distance_summary(d);
    return o;
}

}  // namespace

json code_oracles(const LinearCode& code, const DistanceOptions& opts) {
    return oracles_of(code, min_distance(code, opts));
}

json report_json(const VerificationReport& r, const ReportJsonOptions& opts) {
    json out;
    out["entry"] = r.entry;
    out["family"] = family_name(r.recipe.family);
    json params = json::object();
    for (const auto& [k, v] : r.recipe.params) params[k] = v;
    out["params"] = params;
    out["code_field"] = r.recipe.code_field_order;
    json hyp = json::array();
    for (const auto& h : r.recipe.checks) {
        hyp.push_back({{"name", h.name}, {"pass", h.pass}, {"required", h.required}, {"detail", h.detail}});
    }
    out["hypotheses"] = hyp;
    out["status"] = status_name(r.status);
    if (r.gamma) {
        const Field& f = *r.gamma->field;
        out["gamma"] = {{"equation", equation_text(r.gamma->equation)},
                        {"value", elem_json(f, r.gamma->gamma)},
                        {"text", f.format(r.gamma->gamma)},
                        {"residual_zero", gamma_residual(*r.gamma) == 0}};
    } else {
        out["gamma"] = nullptr;
    }
    if (r.splitting) {
        const auto& s = *r.splitting;
        out["splitting"] = {{"multiplier", s.s},
                            {"kind", kind_name(s.kind)},
                            {"S1", s.S1.members()},
                            {"S2", s.S2.members()},
                            {"X", s.X.members()}};
    } else {
        out["splitting"] = nullptr;
    }
    json codes = json::array();
    for (const auto& c : r.codes) {
        const Field& f = *c.code.field();
        json j = {{"label", c.label},
                  {"n", c.code.n()},
                  {"k", c.code.k()},
                  {"field", f.q()},
                  {"duality", duality_name(c.duality)},
                  {"self_dual", c.self_dual},
                  {"claimed_distance", c.claimed_distance ? json(*c.claimed_distance) : json(nullptr)},
                  {"mds", c.distance.exact ? json(*c.distance.exact == c.code.n() - c.code.k() + 1) : json(nullptr)},
                  {"distance", distance_json(f, c.distance)}};
        const auto& prov = c.code.extension() ? std::optional<DefiningSet>(c.code.extension()->parent_set)
                                              : (c.code.provenance() ? std::optional<DefiningSet>(
                                                                           c.code.provenance()->defining_set)
                                                                     : std::nullopt);
        if (prov) j["defining_set"] = prov->members();
        if (opts.codes) {
            // Generator of the constacyclic code (the parent, for extended codes).
            if (const auto& e = c.code.extension()) {
                const auto parent = code_from_defining_set(c.code.field(), e->parent_n, e->parent_shift, e->parent_set);
                j["generator_poly"] = parent.provenance()->generator.to_string();
            } else if (c.code.provenance()) {
                j["generator_poly"] = c.code.provenance()->generator.to_string();
            }
            j["code"] = code_json(c.code);
            j["oracles"] = oracles_of(c.code, c.distance);
        }
        codes.push_back(std::move(j));
    }
    out["codes"] = codes;
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            {{"name", c.name}, {"outcome", outcome_name(c.outcome)}, {"detail", c.detail}, {"witness", c.witness}});
    }
    out["checks"] = checks;
    out["notes"] = r.notes;
    if (opts.timings) {
        json t = json::object();
        for (const auto& [k, v] : r.timings) t[k] = v;
        out["timings"] = t;
    }
    return out;
}

json status_counts(const std::vector<VerificationReport>& reports) {
    json out = json::object();
    for (Status s : {Status::pass, Status::hypothesis_fail, Status::field_too_large, Status::property_fail,
                     Status::unverified_distance}) {
        out[status_name(s)] = std::count_if(reports.begin(), reports.end(),
                                            [&](const VerificationReport& r) { return r.status == s; });
    }
    return out;
}

namespace {

std::string code_params(const BuiltCode& c) {
    std::ostringstream os;
    os << "[" << c.code.n() << "," << c.code.k() << ",";
    if (c.distance.exact) {
        os << *c.distance.exact;
    } else {
        os << c.distance.lower << ".." << c.distance.upper;
    }
    os << "]";
    return os.str();
}

// First failing check, else the first failing hypothesis, else the distance method.
std::string reason(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        if (c.outcome == Outcome::fail) return c.name + ": " + c.detail;
    }
    const auto f = r.recipe.failing();
    if (!f.empty()) {
        std::string s = "fails";
        for (const auto& n : f) s += " " + n;
        return s;
    }
    if (!r.notes.empty() && r.codes.empty()) return r.notes.front();
    std::string s;
    for (const auto& c : r.codes) {
        const std::string m = method_name(c.distance.method);
        if (s.find(m) == std::string::npos) s += (s.empty() ? "" : ", ") + m;
    }
    return s;
}

}  // namespace

std::string reports_text(const std::vector<VerificationReport>& reports) {
    std::vector<std::string> codes(reports.size());
    std::size_t width = 6;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (const auto& c : reports[i].codes) codes[i] += (codes[i].empty() ? "" : " ") + code_params(c);
        if (codes[i].empty()) codes[i] = "-";
        width = std::max(width, codes[i].size() + 2);
    }
    std::ostringstream os;
    os << std::left << std::setw(10) << "table" << std::setw(7) << "cell" << std::setw(6) << "n" << std::setw(8)
       << "q" << std::setw(23) << "family" << std::setw(21) << "status" << std::setw(static_cast<int>(width))
       << "codes" << "detail\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        const bool has = !r.entry.is_null();
        const auto n = r.recipe.param("n");
        os << std::setw(10) << (has ? r.entry["table"].get<std::string>().substr(0, 2) : "-") << std::setw(7)
           << (has ? r.entry["cell"].get<std::string>() : "-") << std::setw(6)
           << (has ? std::to_string(r.entry["n"].get<std::uint64_t>()) : (n ? std::to_string(*n) : "-"))
           << std::setw(8)
           << (has ? r.entry["q_printed"].get<std::string>() : std::to_string(r.recipe.param("q").value_or(0)))
           << std::setw(23) << family_name(r.recipe.family) << std::setw(21) << status_name(r.status)
           << std::setw(static_cast<int>(width)) << codes[i] << reason(r) << "\n";
    }
    const json counts = status_counts(reports);
    os << "\n" << reports.size() << " entries:";
    for (const auto& [k, v] : counts.items()) {
        if (v.get<long long>() > 0) os << " " << k << "=" << v.get<long long>();
    }
    os << "\n";
    return os.str();
}

}  // namespace duadic
