// Batch front end: group profiles, spanning-tree counts, abelian partitions
// and the closed-form verification ledger. JSON on stdout, diagnostics on
// stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commkappa/commuting_graph.hpp"
#include "commkappa/errors.hpp"
#include "commkappa/formulas.hpp"
#include "commkappa/group.hpp"
#include "commkappa/json_io.hpp"
#include "commkappa/partitions.hpp"
#include "commkappa/treecount.hpp"

using namespace commkappa;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitInapplicable = 4;
constexpr int kExitMismatch = 1;

/// Either a spec file or a family name plus parameter flags.
struct GroupSource {
    std::string spec_file;
    std::string family;
    std::map<std::string, long long> params;

    void attach(CLI::App* cmd) {
        cmd->add_option("spec", spec_file, "GroupSpec JSON file");
        cmd->add_option("--family", family, "named family (dihedral, quaternion, semidihedral, symmetric, ...)");
        for (const char* key : {"k", "p", "q", "d", "n", "a", "b", "u"}) {
            cmd->add_option_function<long long>(std::string("--") + key,
                                                [this, key](long long v) { params[key] = v; },
                                                std::string("family parameter ") + key);
        }
    }

    GroupTable build() const {
        if (spec_file.empty() == family.empty())
            throw Error(ErrorKind::ParseError, "give exactly one of a spec file or --family");
        if (!family.empty()) {
            json j = {{"family", family}, {"params", params}};
            return group_from_json(j);
        }
        std::ifstream in(spec_file);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + spec_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::ParseError, spec_file + ": byte " + std::to_string(e.byte) + ": " + e.what());
        }
        return group_from_json(j);
    }
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
            return kExitParse;
        case ErrorKind::NotACGroup:
        case ErrorKind::ExactCapExceeded:
        case ErrorKind::TooLargeForExact:
        case ErrorKind::AbelianInput:
        case ErrorKind::CenterTooSmall:
        case ErrorKind::IndexTooSmall:
        case ErrorKind::Disconnected:
            return kExitInapplicable;
        default:
            return kExitConstruction;
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_group(const GroupSource& src, const std::string& dump_graph) {
    const GroupTable g = src.build();
    emit(to_json(profile(g), g));
    if (!dump_graph.empty()) {
        std::ofstream out(dump_graph);
        if (!out) throw std::runtime_error("cannot write " + dump_graph);
        write_edge_list(out, commuting_graph(g));
    }
    return 0;
}

int cmd_kappa(const GroupSource& src, const std::string& method, bool cross_check) {
    const GroupTable g = src.build();
    KappaResult r;
    if (cross_check) {
        r = kappa_cross_check(g);
    } else if (method == "auto") {
        r = kappa_auto(g);
    } else if (method == "matrix") {
        r = kappa_matrix_tree(commuting_graph(g));
    } else if (method == "modular") {
        r = kappa_modular(commuting_graph(g));
    } else if (method == "ac") {
        r = kappa_ac(g);
    } else {
        r = kappa_spectrum(g);
    }
    emit(to_json(r));
    return 0;
}

int cmd_partition(const GroupSource& src, const std::string& find, std::optional<std::size_t> n_max,
                  const std::string& verify_file, bool bound) {
    const int modes = !find.empty() + !verify_file.empty() + bound;
    if (modes != 1) throw Error(ErrorKind::ParseError, "give exactly one of --find, --verify, --bound");
    const GroupTable g = src.build();
    if (bound) {
        emit({{"order", g.order()}, {"class_count", profile(g).class_count}, {"bound", lower_bound_blocks(g)}});
        return 0;
    }
    if (!verify_file.empty()) {
        std::ifstream in(verify_file);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + verify_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::ParseError, verify_file + ": byte " + std::to_string(e.byte) + ": " + e.what());
        }
        const PartitionCertificate cert = certificate_from_json(j);
        const PartitionVerdict v = verify_partition(g, cert);
        emit({{"ok", v.ok}, {"violation", v.violation}, {"n", cert.n()}});
        return v.ok ? 0 : kExitMismatch;
    }
    const SearchMode mode = find == "exact" ? SearchMode::Exact : SearchMode::Heuristic;
    const PartitionSearch s = find_partition(g, mode, n_max.value_or(SIZE_MAX));
    if (!s.certificate) {
        emit({{"result", "not_found"}, {"conclusive", s.conclusive}});
        return 0;
    }
    json j = to_json(*s.certificate);
    j["result"] = "found";
    j["kappa_lower_bound"] = partition_kappa_bound(*s.certificate).to_string();
    emit(j);
    return 0;
}

int cmd_verify(const std::string& scope_name, bool timings) {
    const LedgerScope scope = scope_name == "full" ? LedgerScope::Full : LedgerScope::Default;
    const std::vector<LedgerEntry> entries = verify_ledger(ledger_instances(scope), scope, timings);
    json out = json::array();
    std::size_t unexpected = 0, expected = 0;
    for (const auto& e : entries) {
        out.push_back(to_json(e));
        if (e.verdict == Verdict::Mismatch) (e.expected ? expected : unexpected) += 1;
    }
    emit(out);
    std::cerr << entries.size() << " entries, " << expected << " expected mismatch(es), " << unexpected
              << " unexpected mismatch(es)\n";
    return unexpected == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commkappa: spanning trees of commuting graphs of finite groups"};
    app.require_subcommand(1);

    GroupSource group_src, kappa_src, part_src;

    auto* group = app.add_subcommand("group", "print the group profile");
    group_src.attach(group);
    std::string dump_graph;
    group->add_option("--dump-graph", dump_graph, "write the commuting graph as an edge list");

    auto* kappa = app.add_subcommand("kappa", "count spanning trees of the commuting graph");
    kappa_src.attach(kappa);
    std::string method = "auto";
    kappa->add_option("--method", method, "engine")
        ->check(CLI::IsMember({"auto", "matrix", "modular", "ac", "spectrum"}));
    bool cross_check = false;
    kappa->add_flag("--cross-check", cross_check, "run every applicable engine");

    auto* part = app.add_subcommand("partition", "abelian partitions");
    part_src.attach(part);
    std::string find, verify_file;
    std::optional<std::size_t> n_max;
    bool bound = false;
    part->add_option("--find", find, "search mode")->check(CLI::IsMember({"exact", "heuristic"}));
    part->add_option("--n-max", n_max, "largest n to search for");
    part->add_option("--verify", verify_file, "certificate JSON to check");
    part->add_flag("--bound", bound, "lower bound on the number of blocks");

    auto* verify = app.add_subcommand("verify", "check closed forms against the engines");
    std::string scope = "default";
    verify->add_option("--scope", scope, "instance set")->check(CLI::IsMember({"default", "full"}));
    bool timings = false;
    verify->add_flag("--timings", timings, "record per-entry milliseconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*group) return cmd_group(group_src, dump_graph);
        if (*kappa) return cmd_kappa(kappa_src, method, cross_check);
        if (*part) return cmd_partition(part_src, find, n_max, verify_file, bound);
        return cmd_verify(scope, timings);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConstruction;
    }
}
