#include "duadic/api.hpp"

#include "duadic/numtheory.hpp"
#include "duadic/serialize.hpp"

namespace duadic {

using nlohmann::json;

ConstructionRecipe recipe_from_args(Family family, std::uint64_t q, const LengthArgs& len) {
    auto need_n = [&] {
        if (!len.n) throw Error(Errc::InvalidArgument, family_name(family) + " needs --n");
        return *len.n;
    };
    switch (family) {
        case Family::cyclic_hermitian:
            if (!len.n && len.p && len.m) {
                const auto n = nt::checked_pow(*len.p, static_cast<unsigned>(*len.m));
                if (!n) throw Error(Errc::InvalidArgument, "p^m overflows");
                return recipe_cyclic_hermitian(q, *n);
            }
            if (!len.n) throw Error(Errc::InvalidArgument, "cyclic-hermitian needs --n or --p and --m");
            return recipe_cyclic_hermitian(q, *len.n);
        case Family::nega_extended:
            if (!len.n && len.p && len.t) return recipe_nega_extended(q, *len.p, *len.t);
            if (!len.n) throw Error(Errc::InvalidArgument, "nega-extended needs --n or --p and --t");
            return make_recipe(family, q, *len.n);
        default: return make_recipe(family, q, need_n());
    }
}

json construct_json(const ConstructionRecipe& recipe, const BuildOptions& opts, bool timings) {
    return report_json(run_recipe(recipe, opts), {timings, true});
}

json factor_json(std::uint64_t q, std::uint32_t n, Shift shift) {
    const auto pp = nt::as_prime_power(q);
    if (!pp) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    auto f = make_field(pp->prime, pp->exponent);
    const auto fac = factor_xn_minus_a(f, n, shift);
    json factors = json::array();
    Poly prod = Poly::constant(f, 1);
    for (const auto& x : fac.factors) {
        prod = prod * x.poly;
        factors.push_back({{"coset", x.coset}, {"degree", x.poly.degree()}, {"poly", poly_json(x.poly)},
                           {"text", x.poly.to_string()}});
    }
    const Elem a = shift == Shift::cyclic ? f->one() : f->neg(f->one());
    json out = {{"field", field_json(*f)},
                {"n", n},
                {"shift", static_cast<int>(shift)},
                {"N", fac.system->N()},
                {"universe", fac.system->universe() == Universe::full ? "full" : "odd"},
                {"splitting_field", fac.extension->describe()},
                {"factors", factors},
                {"product_matches", prod == Poly::xn_minus(f, n, a)}};
    return out;
}

namespace {

void collect(const json& doc, const std::string& label, std::vector<std::pair<std::string, const json*>>& out) {
    if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) collect(doc[i], label + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (!doc.is_object()) return;
    if (doc.contains("genmat")) {
        out.emplace_back(label.empty() ? "code" : label, &doc);
        return;
    }
    if (doc.contains("code") && doc["code"].is_object()) {
        out.emplace_back(doc.value("label", label.empty() ? std::string("code") : label), &doc);
        return;
    }
    if (doc.contains("codes")) collect(doc["codes"], label, out);
}

}  // namespace

json inspect_json(const json& doc, const DistanceOptions& opts) {
    std::vector<std::pair<std::string, const json*>> found;
    collect(doc, "", found);
    json codes = json::array();
    bool all = true;
    for (const auto& [label, node] : found) {
        const json& cj = node->contains("genmat") ? *node : (*node)["code"];
        json entry = {{"label", label}};
        try {
            const LinearCode c = code_from_json(cj);
            entry["n"] = c.n();
            entry["k"] = c.k();
            entry["field"] = c.field()->q();
            entry["oracles"] = code_oracles(c, opts);
            if (node->contains("oracles")) {
                entry["recorded_match"] = entry["oracles"] == (*node)["oracles"];
                all = all && entry["recorded_match"].get<bool>();
            } else {
                entry["recorded_match"] = nullptr;
            }
        } catch (const Error& e) {
            entry["error"] = std::string(errc_name(e.code()));
            entry["detail"] = e.what();
            all = false;
        }
        codes.push_back(std::move(entry));
    }
    return {{"codes", codes}, {"all_match", all && !found.empty()}};
}

}  // namespace duadic
