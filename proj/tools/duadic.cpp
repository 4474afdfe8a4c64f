// Command line front end: construct, factor, verify-tables, search, inspect.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "duadic/api.hpp"
#include "duadic/numtheory.hpp"
#include "duadic/serialize.hpp"

using namespace duadic;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct Common {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 0;
    std::string format = "text";
    bool force = false;
    bool no_timings = false;
};

unsigned default_threads() {
    if (const char* env = std::getenv("DUADIC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void add_common(CLI::App* app, Common& c, bool build_flags = true) {
    app->add_option("--budget", c.budget, "codeword enumeration budget")->check(CLI::Range(1ULL, ~0ULL));
    app->add_option("--threads", c.threads, "worker threads (default: DUADIC_THREADS or all cores)");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app->add_flag("--no-timings", c.no_timings, "omit timing fields from JSON");
    if (build_flags) app->add_flag("--force", c.force, "build even when hypotheses fail");
}

BuildOptions build_options(const Common& c) {
    BuildOptions o;
    o.distance.budget = c.budget;
    o.distance.threads = c.threads;
    o.force = c.force;
    return o;
}

std::uint64_t parse_q(const std::string& s) {
    try {
        return nt::parse_power(s);
    } catch (const Error& e) {
        throw CLI::ValidationError("--q", e.what());
    }
}

bool any_property_fail(const std::vector<VerificationReport>& rs) {
    return std::any_of(rs.begin(), rs.end(), [](const auto& r) { return r.status == Status::property_fail; });
}

std::string set_text(const std::vector<std::uint32_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

void print_construct_text(const json& r, bool matrix) {
    std::cout << r["family"].get<std::string>();
    for (const auto& [k, v] : r["params"].items()) std::cout << " " << k << "=" << v;
    std::cout << "\nstatus " << r["status"].get<std::string>() << "\n";
    std::cout << "hypotheses:\n";
    for (const auto& h : r["hypotheses"]) {
        const bool req = h["required"].get<bool>();
        std::cout << "  " << (h["pass"].get<bool>() ? "ok  " : (req ? "FAIL" : "no  ")) << " " << h["name"].get<std::string>()
                  << (req ? "" : " (alternative)") << ": " << h["detail"].get<std::string>()
                  << "\n";
    }
    if (!r["gamma"].is_null()) {
        std::cout << "gamma: " << r["gamma"]["text"].get<std::string>() << " solves "
                  << r["gamma"]["equation"].get<std::string>() << "\n";
    }
    if (!r["splitting"].is_null()) {
        const auto& s = r["splitting"];
        std::cout << "splitting: mu_" << s["multiplier"] << " " << s["kind"].get<std::string>()
                  << " S1=" << set_text(s["S1"]) << " S2=" << set_text(s["S2"]) << " X=" << set_text(s["X"]) << "\n";
    }
    for (const auto& c : r["codes"]) {
        const auto& d = c["distance"];
        std::cout << "code " << c["label"].get<std::string>() << ": [" << c["n"] << "," << c["k"] << ",";
        if (d["exact"].is_null()) {
            std::cout << d["lower"] << ".." << d["upper"];
        } else {
            std::cout << d["exact"];
        }
        std::cout << "] over GF(" << c["field"] << "), " << c["duality"].get<std::string>()
                  << (c["self_dual"].get<bool>() ? " self-dual" : " NOT self-dual");
        if (c["mds"].is_boolean()) std::cout << (c["mds"].get<bool>() ? ", MDS" : ", not MDS");
        std::cout << "\n";
        if (c.contains("defining_set")) std::cout << "  defining set: " << set_text(c["defining_set"]) << "\n";
        if (c.contains("generator_poly")) std::cout << "  generator polynomial: " << c["generator_poly"].get<std::string>() << "\n";
        if (c["code"].contains("extension")) {
            const auto& e = c["code"]["extension"];
            std::cout << "  " << e["kind"].get<std::string>() << " extension of the length " << e["parent_n"]
                      << " code, gamma = " << r["gamma"]["text"].get<std::string>() << "\n";
        }
        std::cout << "  distance: " << d["method"].get<std::string>() << ", " << d["detail"].get<std::string>()
                  << "\n";
        if (matrix) {
            std::cout << "  generator matrix:\n";
            for (const auto& row : c["code"]["genmat"]) std::cout << "    " << row.dump() << "\n";
        }
    }
    std::cout << "checks:\n";
    for (const auto& c : r["checks"]) {
        std::cout << "  " << c["outcome"].get<std::string>() << " " << c["name"].get<std::string>() << ": "
                  << c["detail"].get<std::string>();
        if (!c["witness"].is_null()) std::cout << " witness " << c["witness"].dump();
        std::cout << "\n";
    }
    for (const auto& n : r["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

json read_json_input(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw CLI::ValidationError("inspect", "cannot open " + path);
        in = &file;
    }
    std::stringstream ss;
    ss << in->rdbuf();
    const std::string text = ss.str();
    // A single JSON document, or JSON lines.
    try {
        return json::parse(text);
    } catch (const json::exception&) {
    }
    json all = json::array();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            all.push_back(json::parse(line));
        } catch (const json::exception& e) {
            throw CLI::ValidationError("inspect", std::string("input is not JSON: ") + e.what());
        }
    }
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"duadic: MDS self-dual codes from duadic constacyclic codes"};
    app.require_subcommand(1, 1);
    const std::string families = [] {
        std::string s;
        for (Family f : kAllFamilies) s += (s.empty() ? "" : ", ") + family_name(f);
        return s;
    }();

    Common common;
    std::string family_s, q_s;
    LengthArgs len;
    bool matrix = false;
    auto* construct = app.add_subcommand("construct", "build and verify one construction");
    construct->add_option("--family", family_s, families)->required();
    construct->add_option("--q", q_s, "field order, e.g. 961 or 31^2")->required();
    construct->add_option("--n", len.n, "code length before extension");
    construct->add_option("--p", len.p);
    construct->add_option("--m", len.m);
    construct->add_option("--t", len.t);
    construct->add_flag("--matrix", matrix, "print the generator matrix");
    add_common(construct, common);

    std::uint32_t fn = 0;
    int shift = 1;
    auto* factor = app.add_subcommand("factor", "cyclotomic cosets and minimal polynomials of x^n - a");
    factor->add_option("--q", q_s)->required();
    factor->add_option("--n", fn)->required()->check(CLI::Range(1U, 1U << 20));
    factor->add_option("--shift", shift, "a = 1 (cyclic) or -1 (negacyclic)")->check(CLI::IsMember({1, -1}));
    factor->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> tables;
    std::string tables_file;
    bool with_codes = false;
    auto* vt = app.add_subcommand("verify-tables", "verify the printed table entries");
    vt->add_option("--table", tables, "table id: 1..6, T1.. or full id (repeatable; default all)");
    vt->add_option("--tables-file", tables_file, "table data JSON overriding the built-in copy");
    vt->add_flag("--with-codes", with_codes, "embed code records in JSON reports");
    add_common(vt, common);

    std::string qmin = "2", qmax, nmin = "1", nmax;
    bool verbose = false;
    auto* search = app.add_subcommand("search", "sweep a family over q and n ranges");
    search->add_option("--family", family_s, families)->required();
    search->add_option("--q-min", qmin);
    search->add_option("--q-max", qmax)->required();
    search->add_option("--n-min", nmin);
    search->add_option("--n-max", nmax)->required();
    search->add_flag("--verbose", verbose, "also report HYPOTHESIS_FAIL entries");
    search->add_flag("--with-codes", with_codes, "embed code records in JSON reports");
    add_common(search, common);

    std::string input = "-";
    auto* inspect = app.add_subcommand("inspect", "reload code JSON and re-run the oracles");
    inspect->add_option("file", input, "JSON or JSON-lines file ('-' for stdin)");
    add_common(inspect, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    if (common.threads == 0) common.threads = default_threads();
    const bool as_json = common.format == "json";

    try {
        if (construct->parsed() || search->parsed()) {
            if (!parse_family(family_s)) throw CLI::ValidationError("--family", "unknown family '" + family_s + "'");
        }
        if (construct->parsed()) {
            const auto rec = recipe_from_args(*parse_family(family_s), parse_q(q_s), len);
            const json r = construct_json(rec, build_options(common), !common.no_timings);
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                print_construct_text(r, matrix);
            }
            return r["status"] == "PROPERTY_FAIL" ? 1 : 0;
        }
        if (factor->parsed()) {
            const json r = factor_json(parse_q(q_s), fn, shift == 1 ? Shift::cyclic : Shift::negacyclic);
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                std::cout << "x^" << fn << (shift == 1 ? " - 1" : " + 1") << " over GF(" << r["field"]["q"]
                          << "), roots in " << r["splitting_field"].get<std::string>() << "\n";
                for (const auto& f : r["factors"]) {
                    std::cout << "  coset " << set_text(f["coset"]) << "  degree " << f["degree"] << "  "
                              << f["text"].get<std::string>() << "\n";
                }
                std::cout << r["factors"].size() << " factors; product "
                          << (r["product_matches"].get<bool>() ? "matches" : "DOES NOT match") << "\n";
            }
            return r["product_matches"].get<bool>() ? 0 : 1;
        }
        if (vt->parsed() || search->parsed()) {
            VerifyOptions vo;
            vo.build = build_options(common);
            vo.threads = common.threads;
            std::vector<VerificationReport> reports;
            if (vt->parsed()) {
                const auto entries = tables_file.empty() ? load_tables(embedded_tables()) : load_tables_file(tables_file);
                std::vector<TableId> ids;
                if (tables.empty()) {
                    for (const auto& e : entries) {
                        if (std::find(ids.begin(), ids.end(), e.table) == ids.end()) ids.push_back(e.table);
                    }
                } else {
                    for (const auto& t : tables) ids.push_back(parse_table(t));
                }
                for (TableId id : ids) {
                    auto part = verify_table(entries, id, vo);
                    std::move(part.begin(), part.end(), std::back_inserter(reports));
                }
            } else {
                const IntRange qr{parse_q(qmin), parse_q(qmax)};
                const IntRange nr{nt::parse_power(nmin), nt::parse_power(nmax)};
                reports = search_family(*parse_family(family_s), qr, nr, vo, verbose);
            }
            if (as_json) {
                for (const auto& r : reports) std::cout << report_json(r, {!common.no_timings, with_codes}).dump() << "\n";
            } else {
                std::cout << reports_text(reports);
            }
            return any_property_fail(reports) ? 1 : 0;
        }
        if (inspect->parsed()) {
            DistanceOptions d;
            d.budget = common.budget;
            d.threads = common.threads;
            const json r = inspect_json(read_json_input(input), d);
            if (as_json) {
                std::cout << r.dump() << "\n";
            } else {
                for (const auto& c : r["codes"]) {
                    std::cout << c["label"].get<std::string>() << ": ";
                    if (c.contains("error")) {
                        std::cout << c["error"].get<std::string>() << " " << c["detail"].get<std::string>() << "\n";
                        continue;
                    }
                    const auto& o = c["oracles"];
                    const auto& d = o["distance"];
                    std::cout << "[" << c["n"] << "," << c["k"] << ","
                              << (d["exact"].is_null() ? d["lower"].dump() + ".." + d["upper"].dump() : d["exact"].dump())
                              << "] over GF(" << c["field"] << ") euclidean_self_dual=" << o["euclidean_self_dual"]
                              << " hermitian_self_dual=" << o["hermitian_self_dual"] << " distance by "
                              << d["method"].get<std::string>() << " recorded_match=" << c["recorded_match"] << "\n";
                }
                std::cout << (r["all_match"].get<bool>() ? "all oracle outcomes match" : "MISMATCH or no codes") << "\n";
            }
            return r["all_match"].get<bool>() ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return 0;
}
