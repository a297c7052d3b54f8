#include "commkappa/json_io.hpp"

#include <algorithm>

#include "commkappa/errors.hpp"
#include "commkappa/field_matrix.hpp"
#include "commkappa/perm.hpp"

namespace commkappa {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, (where.empty() ? "/" : where) + ": " + what);
}

long long get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long long>();
}

template <class Element>
GroupTable generate_labelled(const std::vector<Element>& gens, const std::string& name) {
    return generate_group(gens, kDefaultOrderCap, name);
}

template <int D>
GroupTable matrix_group(const json& gens, const Field& f, const std::string& name) {
    std::vector<FieldMatrix<D>> mats;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "/generators/" + std::to_string(i);
        const json& m = gens[i];
        if (!m.is_array() || m.size() != D) bad(where, "expected a " + std::to_string(D) + "x" + std::to_string(D) + " matrix");
        typename FieldMatrix<D>::Entries e{};
        for (int r = 0; r < D; ++r) {
            if (!m[r].is_array() || m[r].size() != D) bad(where + "/" + std::to_string(r), "expected a row of length " + std::to_string(D));
            for (int c = 0; c < D; ++c) {
                const long long v = get_int(m[r][c], where + "/" + std::to_string(r) + "/" + std::to_string(c));
                if (v < 0) bad(where, "negative entry");
                e[r * D + c] = static_cast<FieldElem>(v);
            }
        }
        try {
            mats.emplace_back(f, e);
        } catch (const Error& err) {
            throw Error(err.kind(), "generator " + std::to_string(i) + ": " + err.detail());
        }
    }
    return generate_labelled(mats, name);
}

}  // namespace

FamilySpec family_from_json(const json& spec, const std::string& where) {
    if (!spec.is_object()) bad(where, "expected an object");
    if (!spec.contains("family") || !spec["family"].is_string()) bad(where + "/family", "expected a family name");
    FamilySpec f;
    try {
        f.family = parse_family(spec["family"].get<std::string>());
    } catch (const Error& e) {
        bad(where + "/family", e.detail());
    }
    if (spec.contains("params")) {
        const json& p = spec["params"];
        if (!p.is_object()) bad(where + "/params", "expected an object");
        for (const auto& [k, v] : p.items()) f.params[k] = get_int(v, where + "/params/" + k);
    }
    if (f.family == Family::DirectProduct) {
        if (!spec.contains("factors") || !spec["factors"].is_array() || spec["factors"].size() != 2)
            bad(where + "/factors", "direct_product needs exactly two factors");
        for (std::size_t i = 0; i < 2; ++i)
            f.factors.push_back(family_from_json(spec["factors"][i], where + "/factors/" + std::to_string(i)));
    }
    return f;
}

GroupTable group_from_json(const json& spec) {
    if (!spec.is_object()) bad("", "expected an object");
    const bool has_family = spec.contains("family");
    const bool has_gens = spec.contains("generators");
    if (has_family == has_gens) bad("", "specify exactly one of \"family\" or \"generators\"");
    if (has_family) return make_family(family_from_json(spec));

    const json& gens = spec["generators"];
    if (!gens.is_array() || gens.empty()) bad("/generators", "expected a nonempty array");
    std::string name;
    if (spec.contains("name")) {
        if (!spec["name"].is_string()) bad("/name", "expected a string");
        name = spec["name"].get<std::string>();
    }
    if (gens[0].is_string()) {
        if (spec.contains("field")) bad("/field", "permutation generators take no field");
        std::size_t degree = 0;
        if (spec.contains("points")) {
            const long long d = get_int(spec["points"], "/points");
            if (d < 1 || d > 64) bad("/points", "need 1 <= points <= 64");
            degree = static_cast<std::size_t>(d);
        } else {
            // Largest point mentioned, plus one.
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (!gens[i].is_string()) bad("/generators/" + std::to_string(i), "expected a cycle string");
                std::string digits;
                for (char ch : gens[i].get<std::string>() + " ") {
                    if (std::isdigit(static_cast<unsigned char>(ch))) {
                        digits += ch;
                    } else if (!digits.empty()) {
                        if (digits.size() > 3) bad("/generators/" + std::to_string(i), "point out of range");
                        degree = std::max<std::size_t>(degree, std::stoul(digits) + 1);
                        digits.clear();
                    }
                }
            }
            degree = std::max<std::size_t>(degree, 1);
        }
        std::vector<Perm> perms;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string where = "/generators/" + std::to_string(i);
            if (!gens[i].is_string()) bad(where, "expected a cycle string");
            try {
                perms.push_back(Perm::parse(degree, gens[i].get<std::string>()));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::ParseError) bad(where, e.detail());
                throw Error(e.kind(), "generator " + std::to_string(i) + ": " + e.detail());
            }
        }
        return generate_labelled(perms, name);
    }
    if (!gens[0].is_array()) bad("/generators/0", "expected a cycle string or a matrix");
    if (!spec.contains("field") || !spec["field"].is_object()) bad("/field", "matrix generators need a field {p, n}");
    const json& fj = spec["field"];
    if (!fj.contains("p")) bad("/field/p", "missing");
    const long long p = get_int(fj["p"], "/field/p");
    const long long n = fj.contains("n") ? get_int(fj["n"], "/field/n") : 1;
    if (p < 2 || n < 1) bad("/field", "need p >= 2 and n >= 1");
    const Field f = build_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
    const std::size_t dim = gens[0].size();
    if (dim == 2) return matrix_group<2>(gens, f, name);
    if (dim == 3) return matrix_group<3>(gens, f, name);
    bad("/generators/0", "only 2x2 and 3x3 matrices are supported");
}

json to_json(const Factorization& f) {
    json a = json::array();
    for (const auto& [p, e] : f) a.push_back({p, e});
    return a;
}

json to_json(const GroupProfile& p, const GroupTable& g) {
    json j;
    j["name"] = g.name();
    j["order"] = p.order;
    j["abelian"] = g.is_abelian();
    j["center"] = p.center;
    j["center_size"] = p.center_size();
    j["class_count"] = p.class_count;
    j["class_sizes"] = p.class_sizes;
    j["element_orders"] = p.element_orders;
    j["max_orders"] = p.max_orders;
    j["centralizer_count"] = p.centralizer_count;
    j["is_ac"] = p.is_ac;
    return j;
}

json to_json(const KappaResult& r) {
    json j;
    j["value"] = r.value.to_string();
    j["method"] = to_string(r.method);
    j["factors"] = r.factors ? to_json(*r.factors) : json(nullptr);
    j["engines_agreed"] = r.engines_agreed;
    json engines = json::array();
    for (const auto& e : r.engines) engines.push_back({{"engine", to_string(e.method)}, {"value", e.value.to_string()}});
    j["engines"] = engines;
    j["disconnected"] = r.disconnected;
    j["notes"] = r.notes;
    return j;
}

json to_json(const PartitionCertificate& c) {
    return {{"A", c.A}, {"blocks", c.blocks}, {"n", c.n()}, {"verified", c.verified}};
}

PartitionCertificate certificate_from_json(const json& j) {
    if (!j.is_object()) bad("", "expected an object");
    PartitionCertificate c;
    auto indices = [](const json& a, const std::string& where) {
        if (!a.is_array()) bad(where, "expected an array of element indices");
        std::vector<ElementIndex> out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const long long v = get_int(a[i], where + "/" + std::to_string(i));
            if (v < 0 || v > 65535) bad(where + "/" + std::to_string(i), "index out of range");
            out.push_back(static_cast<ElementIndex>(v));
        }
        return out;
    };
    if (!j.contains("A")) bad("/A", "missing");
    c.A = indices(j["A"], "/A");
    if (!j.contains("blocks") || !j["blocks"].is_array()) bad("/blocks", "expected an array of blocks");
    for (std::size_t i = 0; i < j["blocks"].size(); ++i)
        c.blocks.push_back(indices(j["blocks"][i], "/blocks/" + std::to_string(i)));
    if (j.contains("n") && get_int(j["n"], "/n") != static_cast<long long>(c.blocks.size()))
        bad("/n", "does not match the number of blocks");
    return c;
}

json to_json(const LedgerEntry& e) {
    json j;
    j["formula"] = e.formula;
    j["params"] = e.params;
    j["group"] = e.group;
    j["closed_form"] = {{"value", e.closed_form.value.to_string()}, {"factors", to_json(e.closed_form.factors)}};
    json oracles = json::array();
    for (const auto& o : e.oracles) oracles.push_back({{"engine", o.engine}, {"value", o.value.to_string()}});
    j["oracles"] = oracles;
    j["verdict"] = to_string(e.verdict);
    j["classification"] = e.verdict == Verdict::Mismatch ? (e.expected ? "expected-mismatch" : "unexpected-mismatch")
                                                         : to_string(e.verdict);
    j["note"] = e.note;
    j["ms"] = e.ms ? json(*e.ms) : json(nullptr);
    return j;
}

}  // namespace commkappa
