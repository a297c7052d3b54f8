#include "commkappa/treecount.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "commkappa/determinant.hpp"
#include "commkappa/errors.hpp"
#include "commkappa/group.hpp"
#include "commkappa/spectra.hpp"

namespace commkappa {

namespace {

constexpr std::size_t kCrossCheckOrder = 200;

KappaResult disconnected_result(KappaMethod m) {
    KappaResult r;
    r.value = BigNat(0UL);
    r.method = m;
    r.disconnected = true;
    r.engines.push_back({m, r.value});
    r.notes.push_back("graph is disconnected");
    return r;
}

void record_agreement(KappaResult& r) {
    for (const auto& e : r.engines)
        if (!(e.value == r.value)) {
            r.engines_agreed = false;
            r.notes.push_back(to_string(e.method) + " disagrees: " + e.value.to_string());
        }
}

}  // namespace

std::string to_string(KappaMethod m) {
    switch (m) {
        case KappaMethod::MatrixTree: return "matrix_tree";
        case KappaMethod::ModularCrt: return "modular_crt";
        case KappaMethod::AcStructure: return "ac_structure";
        case KappaMethod::Spectrum: return "spectrum";
    }
    return "?";
}

KappaResult kappa_matrix_tree(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw Error(ErrorKind::ExactCapExceeded,
                    std::to_string(g.order()) + " vertices exceeds the matrix-tree cap of " + std::to_string(cap));
    if (!g.is_connected()) return disconnected_result(KappaMethod::MatrixTree);
    KappaResult r;
    r.method = KappaMethod::MatrixTree;
    r.value = BigNat(bareiss_determinant(reduced_laplacian<mpz_class>(g)));
    r.engines.push_back({r.method, r.value});
    return r;
}

KappaResult kappa_matrix_tree(const CommGraph& c, std::size_t cap) { return kappa_matrix_tree(c.graph, cap); }

std::uint64_t default_bit_bound(const Graph& g) {
    std::size_t maxdeg = 0;
    for (std::size_t v = 0; v < g.order(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    if (g.order() <= 1) return 1;
    return static_cast<std::uint64_t>(std::ceil(static_cast<double>(g.order() - 1) * std::log2(static_cast<double>(maxdeg) + 1.0))) + 1;
}

KappaResult kappa_modular(const Graph& g, std::optional<std::uint64_t> bit_bound, unsigned threads) {
    if (!g.is_connected()) return disconnected_result(KappaMethod::ModularCrt);
    const std::uint64_t bound = bit_bound.value_or(default_bit_bound(g));
    const auto primes = crt_primes();
    // Each prime exceeds 2^61, so k primes give a modulus above 2^(61k).
    const std::size_t needed = static_cast<std::size_t>(bound / 61 + 1);
    if (needed > primes.size())
        throw Error(ErrorKind::ExactCapExceeded, "bit bound " + std::to_string(bound) + " needs more than " +
                                                     std::to_string(primes.size()) + " primes");
    const MatrixX<std::int64_t> l = reduced_laplacian<std::int64_t>(g);

    std::vector<std::uint64_t> residues(needed);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < needed; i = next++) residues[i] = determinant_mod(l, primes[i]);
    };
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, needed));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    mpz_class value = 0;
    mpz_class modulus = 1;
    for (std::size_t i = 0; i < needed; ++i) {
        const mpz_class p(static_cast<unsigned long>(primes[i]));
        // value + modulus * ((r - value) * modulus^-1 mod p)
        mpz_class diff = mpz_class(static_cast<unsigned long>(residues[i])) - value;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        mpz_class t = diff * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        value += modulus * t;
        modulus *= p;
    }

    KappaResult r;
    r.method = KappaMethod::ModularCrt;
    r.value = BigNat(value);
    r.engines.push_back({r.method, r.value});
    r.notes.push_back(std::to_string(needed) + " primes for a " + std::to_string(bound) + "-bit bound");
    return r;
}

KappaResult kappa_modular(const CommGraph& c, std::optional<std::uint64_t> bit_bound, unsigned threads) {
    return kappa_modular(c.graph, bit_bound, threads);
}

KappaResult kappa_ac(const GroupTable& g) {
    const CentralizerDecomposition d = centralizer_decomposition(g);
    const std::uint64_t n = d.group_order;
    const std::uint64_t m = d.center_size;
    FactorAccumulator acc;
    acc.add(n, m - 1);
    acc.add(m, d.t() - 1);
    for (auto mi : d.sizes()) acc.add(mi + m, mi - 1);
    KappaResult r;
    r.method = KappaMethod::AcStructure;
    r.factors = acc.result();
    r.value = evaluate(*r.factors);
    r.engines.push_back({r.method, r.value});
    r.notes.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " t=" + std::to_string(d.t()));
    return r;
}

KappaResult kappa_auto(const GroupTable& g) {
    const std::uint64_t n = g.order();
    if (g.is_abelian()) {
        KappaResult r;
        r.method = KappaMethod::Spectrum;
        FactorAccumulator acc;
        if (n >= 2) acc.add(n, n - 2);
        r.factors = acc.result();
        r.value = evaluate(*r.factors);
        r.engines.push_back({r.method, r.value});
        r.notes.push_back("abelian: complete graph, n^(n-2)");
        return r;
    }
    const CommGraph c = commuting_graph(g);
    if (is_ac_group(g)) {
        KappaResult r = kappa_ac(g);
        if (n <= kCrossCheckOrder) {
            r.engines.push_back({KappaMethod::MatrixTree, kappa_matrix_tree(c).value});
            r.engines.push_back({KappaMethod::ModularCrt, kappa_modular(c).value});
        }
        record_agreement(r);
        return r;
    }
    if (n <= kCrossCheckOrder) {
        KappaResult r = kappa_matrix_tree(c);
        r.engines.push_back({KappaMethod::ModularCrt, kappa_modular(c).value});
        record_agreement(r);
        return r;
    }
    return n <= kMatrixTreeCap ? kappa_matrix_tree(c) : kappa_modular(c);
}

KappaResult kappa_spectrum(const GroupTable& g) {
    CliqueExpr expr = CliqueExpr::complete(g.order());
    if (!g.is_abelian()) {
        const CentralizerDecomposition d = centralizer_decomposition(g);
        std::vector<CliqueExpr> parts;
        for (std::size_t m : d.sizes()) parts.push_back(CliqueExpr::complete(m));
        expr = CliqueExpr::join(CliqueExpr::complete(d.center_size), CliqueExpr::disjoint_union(std::move(parts)));
    }
    const LapSpectrum s = spectrum(expr);
    KappaResult r;
    r.method = KappaMethod::Spectrum;
    r.value = kappa_from_spectrum(s);
    r.engines.push_back({r.method, r.value});
    r.notes.push_back("spectrum " + s.to_string());
    return r;
}

KappaResult kappa_cross_check(const GroupTable& g) {
    const CommGraph c = commuting_graph(g);
    std::optional<KappaResult> first;
    std::vector<EngineRun> runs;
    auto take = [&](KappaResult r) {
        runs.push_back({r.method, r.value});
        if (!first) first = std::move(r);
    };
    if (c.order() <= kMatrixTreeCap) take(kappa_matrix_tree(c));
    try {
        take(kappa_modular(c));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ExactCapExceeded) throw;
    }
    if (g.is_abelian() || is_ac_group(g)) {
        if (!g.is_abelian()) take(kappa_ac(g));
        take(kappa_spectrum(g));
    }
    if (!first) throw Error(ErrorKind::ExactCapExceeded, "no engine applies to a group of order " + std::to_string(g.order()));
    KappaResult r = std::move(*first);
    r.engines = std::move(runs);
    record_agreement(r);
    return r;
}

}  // namespace commkappa
