// Thin bindings: every call takes plain arguments and returns a JSON string,
// decoded on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "duadic/api.hpp"
#include "duadic/serialize.hpp"

namespace py = pybind11;
using namespace duadic;
using nlohmann::json;

namespace {

BuildOptions opts(std::uint64_t budget, unsigned threads, bool force) {
    BuildOptions o;
    o.distance.budget = budget;
    o.distance.threads = threads;
    o.force = force;
    return o;
}

Family family_of(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw Error(Errc::InvalidArgument, "unknown family '" + s + "'");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "MDS self-dual codes from duadic constacyclic codes";

    static py::exception<Error> duadic_error(m, "DuadicError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = duadic_error;
            py::object inst = exc(e.what());
            inst.attr("code") = std::string(errc_name(e.code()));
            PyErr_SetObject(exc.ptr(), inst.ptr());
        }
    });

    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : kAllFamilies) out.push_back(family_name(f));
        return out;
    });

    m.def(
        "construct",
        [](const std::string& family, std::uint64_t q, std::optional<std::uint64_t> n, std::optional<std::uint64_t> p,
           std::optional<std::uint64_t> mm, std::optional<std::uint64_t> t, std::uint64_t budget, unsigned threads,
           bool force, bool timings) {
            py::gil_scoped_release release;
            const auto rec = recipe_from_args(family_of(family), q, LengthArgs{n, p, mm, t});
            return construct_json(rec, opts(budget, threads, force), timings).dump();
        },
        py::arg("family"), py::arg("q"), py::arg("n") = py::none(), py::arg("p") = py::none(),
        py::arg("m") = py::none(), py::arg("t") = py::none(), py::arg("budget") = 10'000'000, py::arg("threads") = 1,
        py::arg("force") = false, py::arg("timings") = true);

    m.def(
        "factor",
        [](std::uint64_t q, std::uint32_t n, int shift) {
            if (shift != 1 && shift != -1) throw Error(Errc::InvalidArgument, "shift must be 1 or -1");
            return factor_json(q, n, shift == 1 ? Shift::cyclic : Shift::negacyclic).dump();
        },
        py::arg("q"), py::arg("n"), py::arg("shift") = 1);

    m.def(
        "verify_table",
        [](const std::string& table, std::uint64_t budget, unsigned threads, bool timings) {
            py::gil_scoped_release release;
            VerifyOptions vo;
            vo.build = opts(budget, 1, false);
            vo.threads = threads;
            json out = json::array();
            for (const auto& r : verify_table(load_tables(embedded_tables()), parse_table(table), vo)) {
                out.push_back(report_json(r, {timings, false}));
            }
            return out.dump();
        },
        py::arg("table"), py::arg("budget") = 10'000'000, py::arg("threads") = 1, py::arg("timings") = true);

    m.def(
        "inspect",
        [](const std::string& doc, std::uint64_t budget, unsigned threads) {
            DistanceOptions d;
            d.budget = budget;
            d.threads = threads;
            const json j = json::parse(doc);
            py::gil_scoped_release release;
            return inspect_json(j, d).dump();
        },
        py::arg("doc"), py::arg("budget") = 10'000'000, py::arg("threads") = 1);

    m.def(
        "solve_gamma",
        [](const std::string& equation, std::uint64_t q, std::uint64_t n) -> std::optional<std::vector<std::uint32_t>> {
            GammaEquation eq = equation == "eq1"   ? GammaEquation::eq1
                               : equation == "eq3" ? GammaEquation::eq3
                               : equation == "eq4" ? GammaEquation::eq4
                                                   : throw Error(Errc::InvalidArgument, "equation is eq1, eq3 or eq4");
            auto f = make_field_of_order(q);
            const auto g = solve_gamma(eq, f, n);
            if (!g) return std::nullopt;
            return f->coeffs(g->gamma);
        },
        py::arg("equation"), py::arg("q"), py::arg("n"));
}
