#include "duadic/serialize.hpp"

#include "duadic/extension.hpp"

namespace duadic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

json field_json(const Field& f) {
    return {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"modulus", f.modulus()}, {"omega", f.coeffs(f.omega())}};
}

FieldPtr field_from_json(const json& j) {
    const auto p = get<std::uint64_t>(j, "p");
    const auto m = get<std::uint64_t>(j, "m");
    auto f = make_field(p, m);
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != f->modulus()) {
        bad("field modulus differs from the canonical modulus");
    }
    if (j.contains("omega") && elem_from_json(*f, j.at("omega")) != f->omega()) {
        bad("field omega differs from the canonical primitive element");
    }
    return f;
}

json elem_json(const Field& f, Elem e) { return f.coeffs(e); }

Elem elem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0 || static_cast<unsigned long long>(v) >= f.q()) bad("element out of range");
        if (f.m() != 1) bad("bare integers are only accepted for prime fields");
        return static_cast<Elem>(v);
    }
    if (!j.is_array()) bad("element must be a coefficient array");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= f.p()) bad("bad coefficient");
        c.push_back(x.get<std::uint32_t>());
    }
    if (c.size() > f.m()) bad("too many coefficients");
    return f.from_coeffs(c);
}

json poly_json(const Poly& p) {
    json out = json::array();
    for (Elem c : p.coeffs()) out.push_back(elem_json(*p.field(), c));
    return out;
}

json vector_json(const Field& f, std::span<const Elem> v) {
    json out = json::array();
    for (Elem x : v) out.push_back(elem_json(f, x));
    return out;
}

json matrix_json(const Field& f, const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) out.push_back(vector_json(f, m.row(i)));
    return out;
}

json defining_set_json(const DefiningSet& T) {
    const auto& s = *T.system();
    return {{"N", s.N()},
            {"universe", s.universe() == Universe::full ? "full" : "odd"},
            {"qhat", s.qhat()},
            {"members", T.members()}};
}

DefiningSet defining_set_from_json(const json& j) {
    const auto uni = get<std::string>(j, "universe");
    if (uni != "full" && uni != "odd") bad("universe must be 'full' or 'odd'");
    auto sys = build_cosets(get<std::uint32_t>(j, "N"), get<std::uint64_t>(j, "qhat"),
                            uni == "full" ? Universe::full : Universe::odd);
    return DefiningSet(sys, get<std::vector<std::uint32_t>>(j, "members"));
}

json distance_json(const Field& f, const DistanceResult& d) {
    json out = {{"method", method_name(d.method)},
                {"lower", d.lower},
                {"upper", d.upper},
                {"enumerated", d.enumerated},
                {"detail", d.detail}};
    out["exact"] = d.exact ? json(*d.exact) : json(nullptr);
    out["witness"] = d.witness.empty() ? json(nullptr) : vector_json(f, d.witness);
    return out;
}

json code_json(const LinearCode& c) {
    const Field& f = *c.field();
    json out = {{"field", field_json(f)}, {"n", c.n()}, {"k", c.k()}};
    out["shift"] = c.shift() ? json(static_cast<int>(*c.shift())) : json(nullptr);
    out["genmat"] = matrix_json(f, c.genmat());
    if (c.provenance()) {
        out["defining_set"] = defining_set_json(c.provenance()->defining_set);
        out["generator_poly"] = poly_json(c.provenance()->generator);
    }
    if (c.extension()) {
        const auto& e = *c.extension();
        out["extension"] = {{"kind", e.kind == ExtensionKind::single ? "single" : "double"},
                            {"gamma", elem_json(f, e.gamma)},
                            {"parent_n", e.parent_n},
                            {"parent_shift", static_cast<int>(e.parent_shift)},
                            {"parent_defining_set", defining_set_json(e.parent_set)}};
    }
    return out;
}

LinearCode code_from_json(const json& j) {
    auto f = field_from_json(j.contains("field") ? j.at("field") : json());
    const auto n = get<std::size_t>(j, "n");
    const auto& rows = j.contains("genmat") ? j.at("genmat") : json();
    if (!rows.is_array()) bad("genmat must be an array of rows");
    Matrix G(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) bad("genmat row " + std::to_string(i) + " has wrong length");
        for (std::size_t c = 0; c < n; ++c) G.at(i, c) = elem_from_json(*f, rows[i][c]);
    }
    if (j.contains("k") && j.at("k").get<std::size_t>() != G.rows) bad("k does not match genmat");
    std::optional<Shift> shift;
    if (j.contains("shift") && !j.at("shift").is_null()) {
        const int s = j.at("shift").get<int>();
        if (s != 1 && s != -1) bad("shift must be 1, -1 or null");
        shift = s == 1 ? Shift::cyclic : Shift::negacyclic;
    }
    auto parse_shift = [](int s) {
        if (s != 1 && s != -1) bad("shift must be 1 or -1");
        return s == 1 ? Shift::cyclic : Shift::negacyclic;
    };
    std::optional<Provenance> prov;
    if (j.contains("defining_set") && shift) {
        DefiningSet T = defining_set_from_json(j.at("defining_set"));
        // Recompute the generator; the stored one must agree.
        LinearCode rebuilt = code_from_defining_set(f, static_cast<std::uint32_t>(n), *shift, T);
        if (j.contains("generator_poly")) {
            std::vector<Elem> g;
            for (const auto& x : j.at("generator_poly")) g.push_back(elem_from_json(*f, x));
            if (Poly(f, g) != rebuilt.provenance()->generator) bad("generator_poly does not match the defining set");
        }
        if (!same_row_space(*f, rebuilt.genmat(), G)) bad("genmat does not span the code of the defining set");
        prov = rebuilt.provenance();
    }
    std::optional<ExtensionInfo> ext;
    if (j.contains("extension") && !j.at("extension").is_null()) {
        const auto& e = j.at("extension");
        ExtensionInfo info{get<std::string>(e, "kind") == "single" ? ExtensionKind::single : ExtensionKind::twin,
                           elem_from_json(*f, e.at("gamma")), get<std::uint32_t>(e, "parent_n"),
                           parse_shift(get<int>(e, "parent_shift")),
                           defining_set_from_json(e.at("parent_defining_set"))};
        // The extension record is only trusted if it reproduces the matrix.
        LinearCode parent = code_from_defining_set(f, info.parent_n, info.parent_shift, info.parent_set);
        LinearCode again = info.kind == ExtensionKind::single ? extend_single(parent, info.gamma)
                                                              : extend_double(parent, info.gamma);
        if (again.n() != n || !same_row_space(*f, again.genmat(), G)) {
            bad("extension record does not reproduce genmat");
        }
        ext = info;
    }
    return LinearCode(f, std::move(G), shift, std::move(prov), std::move(ext));
}

}  // namespace duadic
