#include "commkappa/formulas.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "commkappa/commuting_graph.hpp"
#include "commkappa/errors.hpp"
#include "commkappa/field.hpp"
#include "commkappa/treecount.hpp"

namespace commkappa {

namespace {

using Evaluator = std::function<void(const FormulaParams&, FactorAccumulator&)>;

struct FormulaDef {
    ClosedFormInfo info;
    Evaluator eval;
};

[[noreturn]] void out_of_range(const std::string& id, const std::string& why) {
    throw Error(ErrorKind::ParamsOutOfRange, id + ": " + why);
}

long long param(const std::string& id, const FormulaParams& p, const std::string& name, long long lo, long long hi) {
    auto it = p.find(name);
    if (it == p.end()) out_of_range(id, "missing parameter " + name);
    if (it->second < lo || it->second > hi)
        out_of_range(id, name + " = " + std::to_string(it->second) + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    return it->second;
}

std::uint64_t u(long long v) { return static_cast<std::uint64_t>(v); }

bool is_power_of_two(long long q) { return q > 0 && (q & (q - 1)) == 0; }

bool is_prime_power(long long q) {
    if (q < 2) return false;
    const auto f = factor_small(u(q));
    return f.size() == 1;
}

const std::vector<FormulaDef>& registry() {
    static const std::vector<FormulaDef> defs = [] {
        std::vector<FormulaDef> d;
        d.push_back({{"GL2", {"q"}, "q^(q^3-q^2-q-2) (q-1)^(q(3q^3+5)/2-2q^3-2q^2-4) (q+1)^(q(q^3+3)/2-q^3-2)"},
                     [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long q = param("GL2", p, "q", 3, 64);
                         if (!is_prime_power(q)) out_of_range("GL2", "q must be a prime power");
                         a.add(u(q), u(q * q * q - q * q - q - 2));
                         a.add(u(q - 1), u(q * (3 * q * q * q + 5) / 2 - 2 * q * q * q - 2 * q * q - 4));
                         a.add(u(q + 1), u(q * (q * q * q + 3) / 2 - q * q * q - 2));
                     }});
        d.push_back({{"L2_char2", {"q"}, "q^((q-2)(q+1)) (q-1)^((q-3)q(q+1)/2) (q+1)^((q-1)^2 q/2)"},
                     [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long q = param("L2_char2", p, "q", 4, 64);
                         if (!is_power_of_two(q)) out_of_range("L2_char2", "q must be a power of 2");
                         a.add(u(q), u((q - 2) * (q + 1)));
                         a.add(u(q - 1), u((q - 3) * q * (q + 1) / 2));
                         a.add(u(q + 1), u((q - 1) * (q - 1) * q / 2));
                     }});
        d.push_back({{"L2_t", {"k"}, "2^(4k-2) + 2^k + 1"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("L2_t", p, "k", 2, 6);
                         a.add(u((1LL << (4 * k - 2)) + (1LL << k) + 1), 1);
                     }});
        d.push_back({{"L2_table", {"k"}, "2^(k(2^k-2)(2^k+1)) (2^k-1)^(2^(k-1)(2^k-3)(2^k+1)) (2^k+1)^(2^(k-1)(2^k-1)^2)"},
                     [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("L2_table", p, "k", 2, 6);
                         const long long q = 1LL << k;
                         a.add(2, u(k * (q - 2) * (q + 1)));
                         a.add(u(q - 1), u((q / 2) * (q - 3) * (q + 1)));
                         a.add(u(q + 1), u((q / 2) * (q - 1) * (q - 1)));
                     }});
        d.push_back({{"dihedral_even", {"k"}, "2^((3k+2)/2) k^(k-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("dihedral_even", p, "k", 4, 100000);
                         if (k % 2) out_of_range("dihedral_even", "k must be even");
                         a.add(2, u((3 * k + 2) / 2));
                         a.add(u(k), u(k - 2));
                     }});
        d.push_back({{"dihedral_odd", {"k"}, "k^(k-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("dihedral_odd", p, "k", 3, 100000);
                         if (k % 2 == 0) out_of_range("dihedral_odd", "k must be odd");
                         a.add(u(k), u(k - 2));
                     }});
        d.push_back({{"extraspecial", {"p"}, "p^(2p^3-5)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long q = param("extraspecial", p, "p", 2, 1000);
                         if (!is_prime(u(q))) out_of_range("extraspecial", "p must be prime");
                         a.add(u(q), u(2 * q * q * q - 5));
                     }});
        d.push_back({{"pp_center", {"p", "m"}, "p^(n+m-p-3) m^(n-2), n = p^2 m"},
                     [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long q = param("pp_center", p, "p", 2, 1000);
                         const long long m = param("pp_center", p, "m", 2, 100000);
                         if (!is_prime(u(q))) out_of_range("pp_center", "p must be prime");
                         const long long n = q * q * m;
                         if (auto it = p.find("n"); it != p.end() && it->second != n)
                             out_of_range("pp_center", "n must equal p^2 m");
                         a.add(u(q), u(n + m - q - 3));
                         a.add(u(m), u(n - 2));
                     }});
        d.push_back({{"quaternion", {"k"}, "2^(5k-1) k^(2k-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("quaternion", p, "k", 2, 100000);
                         a.add(2, u(5 * k - 1));
                         a.add(u(k), u(2 * k - 2));
                     }});
        d.push_back({{"semidihedral", {"k"}, "2^((2^(k-2)-1)(2k+1)+4)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("semidihedral", p, "k", 4, 40);
                         a.add(2, u(((1LL << (k - 2)) - 1) * (2 * k + 1) + 4));
                     }});
        d.push_back({{"semidihedral_t", {"k"}, "2^(k-1) + 1"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long k = param("semidihedral_t", p, "k", 4, 40);
                         a.add(u((1LL << (k - 1)) + 1), 1);
                     }});
        d.push_back({{"three_abelian_a", {"m"}, "2^(5m-5) m^(4m-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long m = param("three_abelian_a", p, "m", 2, 100000);
                         a.add(2, u(5 * m - 5));
                         a.add(u(m), u(4 * m - 2));
                     }});
        d.push_back({{"three_abelian_b", {"m"}, "3^(10m-6) m^(9m-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long m = param("three_abelian_b", p, "m", 2, 100000);
                         a.add(3, u(10 * m - 6));
                         a.add(u(m), u(9 * m - 2));
                     }});
        d.push_back({{"three_abelian_c", {"m"}, "2^(4m-4) 3^(3m-2) m^(6m-1)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long m = param("three_abelian_c", p, "m", 2, 100000);
                         a.add(2, u(4 * m - 4));
                         a.add(3, u(3 * m - 2));
                         a.add(u(m), u(6 * m - 1));
                     }});
        d.push_back({{"two_abelian", {"m"}, "2^(5m-5) m^(4m-2)"}, [](const FormulaParams& p, FactorAccumulator& a) {
                         const long long m = param("two_abelian", p, "m", 2, 100000);
                         a.add(2, u(5 * m - 5));
                         a.add(u(m), u(4 * m - 2));
                     }});
        std::sort(d.begin(), d.end(), [](const auto& x, const auto& y) { return x.info.id < y.info.id; });
        return d;
    }();
    return defs;
}

FamilySpec fam(Family f, FormulaParams p) { return FamilySpec{f, std::move(p), {}}; }

FamilySpec product(FamilySpec a, FamilySpec b) { return FamilySpec{Family::DirectProduct, {}, {std::move(a), std::move(b)}}; }

}  // namespace

const std::vector<ClosedFormInfo>& closed_forms() {
    static const std::vector<ClosedFormInfo> infos = [] {
        std::vector<ClosedFormInfo> out;
        for (const auto& d : registry()) out.push_back(d.info);
        return out;
    }();
    return infos;
}

ClosedFormValue closed_form(const std::string& id, const FormulaParams& params) {
    for (const auto& d : registry()) {
        if (d.info.id != id) continue;
        FactorAccumulator acc;
        d.eval(params, acc);
        ClosedFormValue v;
        v.factors = acc.result();
        v.value = evaluate(v.factors);
        return v;
    }
    throw Error(ErrorKind::ParamsOutOfRange, "unknown formula id " + id);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::OracleUnavailable: return "oracle-unavailable";
    }
    return "?";
}

bool is_expected_mismatch(const std::string& formula, const FormulaParams&) {
    return formula == "three_abelian_c" || formula == "semidihedral_t" || formula == "L2_t";
}

std::vector<LedgerInstance> ledger_instances(LedgerScope scope) {
    using F = Family;
    std::vector<LedgerInstance> v;
    auto kappa = [&](std::string id, FormulaParams p, FamilySpec g) { v.push_back({std::move(id), std::move(p), std::move(g), OracleKind::Kappa}); };
    auto count = [&](std::string id, FormulaParams p, FamilySpec g) {
        v.push_back({std::move(id), std::move(p), std::move(g), OracleKind::CentralizerCount});
    };
    const FamilySpec q8 = fam(F::GeneralizedQuaternion, {{"k", 2}});
    const FamilySpec d8 = fam(F::Dihedral, {{"k", 4}});
    const FamilySpec heis3 = fam(F::Heisenberg, {{"p", 3}});

    for (long long k : {3, 5, 7}) kappa("dihedral_odd", {{"k", k}}, fam(F::Dihedral, {{"k", k}}));
    for (long long k : {4, 6, 8}) kappa("dihedral_even", {{"k", k}}, fam(F::Dihedral, {{"k", k}}));
    for (long long k : {2, 3, 4}) kappa("quaternion", {{"k", k}}, fam(F::GeneralizedQuaternion, {{"k", k}}));
    for (long long k : {4, 5}) kappa("semidihedral", {{"k", k}}, fam(F::Semidihedral, {{"k", k}}));
    count("semidihedral_t", {{"k", 4}}, fam(F::Semidihedral, {{"k", 4}}));
    kappa("extraspecial", {{"p", 3}}, heis3);
    kappa("extraspecial", {{"p", 3}}, fam(F::ModularP3, {{"p", 3}}));
    kappa("L2_char2", {{"q", 4}}, fam(F::L2, {{"k", 2}}));
    kappa("L2_table", {{"k", 2}}, fam(F::L2, {{"k", 2}}));
    kappa("GL2", {{"q", 3}}, fam(F::GL2, {{"q", 3}}));
    kappa("GL2", {{"q", 4}}, fam(F::GL2, {{"q", 4}}));
    kappa("pp_center", {{"p", 2}, {"m", 2}}, q8);
    kappa("pp_center", {{"p", 2}, {"m", 2}}, d8);
    kappa("pp_center", {{"p", 3}, {"m", 3}}, heis3);
    kappa("pp_center", {{"p", 2}, {"m", 6}}, product(d8, fam(F::Cyclic, {{"n", 3}})));
    kappa("two_abelian", {{"m", 2}}, q8);
    kappa("two_abelian", {{"m", 4}}, product(q8, fam(F::Cyclic, {{"n", 2}})));
    kappa("three_abelian_a", {{"m", 2}}, d8);
    kappa("three_abelian_b", {{"m", 3}}, heis3);
    kappa("three_abelian_c", {{"m", 2}}, fam(F::Dihedral, {{"k", 6}}));

    if (scope == LedgerScope::Full) {
        kappa("dihedral_odd", {{"k", 9}}, fam(F::Dihedral, {{"k", 9}}));
        kappa("quaternion", {{"k", 6}}, fam(F::GeneralizedQuaternion, {{"k", 6}}));
        kappa("semidihedral", {{"k", 6}}, fam(F::Semidihedral, {{"k", 6}}));
        count("semidihedral_t", {{"k", 5}}, fam(F::Semidihedral, {{"k", 5}}));
        kappa("extraspecial", {{"p", 5}}, fam(F::Heisenberg, {{"p", 5}}));
        kappa("L2_char2", {{"q", 8}}, fam(F::L2, {{"k", 3}}));
        kappa("L2_char2", {{"q", 16}}, fam(F::L2, {{"k", 4}}));
        kappa("L2_table", {{"k", 3}}, fam(F::L2, {{"k", 3}}));
        count("L2_t", {{"k", 2}}, fam(F::L2, {{"k", 2}}));
        count("L2_t", {{"k", 3}}, fam(F::L2, {{"k", 3}}));
        kappa("GL2", {{"q", 5}}, fam(F::GL2, {{"q", 5}}));
        kappa("three_abelian_b", {{"m", 3}}, fam(F::ModularP3, {{"p", 3}}));
        kappa("three_abelian_c", {{"m", 2}}, fam(F::GeneralizedQuaternion, {{"k", 3}}));
        kappa("three_abelian_c", {{"m", 3}}, product(fam(F::Symmetric, {{"d", 3}}), fam(F::Cyclic, {{"n", 3}})));
    }
    return v;
}

std::vector<LedgerEntry> verify_ledger(const std::vector<LedgerInstance>& instances, LedgerScope scope, bool timings) {
    const std::size_t engine_cap = scope == LedgerScope::Full ? kMatrixTreeCap : 200;
    std::vector<LedgerEntry> out;
    for (const auto& inst : instances) {
        const auto start = std::chrono::steady_clock::now();
        LedgerEntry e;
        e.formula = inst.formula;
        e.params = inst.params;
        e.group = inst.group.describe();
        std::string computed;
        try {
            e.closed_form = closed_form(inst.formula, inst.params);
            const GroupTable g = make_family(inst.group);
            e.group = g.name();
            if (inst.oracle == OracleKind::CentralizerCount) {
                e.oracles.push_back({"centralizer_count", BigNat(centralizer_decomposition(g).t())});
                computed = e.oracles.back().value.to_string();
            } else {
                if (!g.is_abelian() && is_ac_group(g)) {
                    const KappaResult r = kappa_ac(g);
                    e.oracles.push_back({"ac_structure", r.value});
                    computed = format_factorization(*r.factors);
                }
                if (g.order() <= engine_cap) {
                    const CommGraph c = commuting_graph(g);
                    e.oracles.push_back({"matrix_tree", kappa_matrix_tree(c).value});
                    if (computed.empty()) computed = e.oracles.back().value.to_string();
                    e.oracles.push_back({"modular_crt", kappa_modular(c).value});
                }
            }
        } catch (const Error& err) {
            e.note = err.what();
        }
        if (e.oracles.empty()) {
            e.verdict = Verdict::OracleUnavailable;
        } else {
            const bool all = std::all_of(e.oracles.begin(), e.oracles.end(),
                                         [&](const OracleValue& o) { return o.value == e.closed_form.value; });
            e.verdict = all ? Verdict::Match : Verdict::Mismatch;
        }
        if (e.verdict == Verdict::Mismatch) {
            e.expected = is_expected_mismatch(e.formula, e.params);
            const std::string printed = inst.oracle == OracleKind::CentralizerCount
                                            ? e.closed_form.value.to_string()
                                            : format_factorization(e.closed_form.factors);
            e.note = "printed " + printed + " vs computed " + computed;
        }
        if (timings) e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const LedgerEntry& a, const LedgerEntry& b) {
        if (a.formula != b.formula) return a.formula < b.formula;
        if (a.params != b.params) return a.params < b.params;
        return a.group < b.group;
    });
    return out;
}

}  // namespace commkappa
