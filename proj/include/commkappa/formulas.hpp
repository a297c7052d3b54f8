#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commkappa/bignat.hpp"
#include "commkappa/group.hpp"

namespace commkappa {

using FormulaParams = std::map<std::string, long long>;

struct ClosedFormValue {
    BigNat value;
    Factorization factors;
};

struct ClosedFormInfo {
    std::string id;
    std::vector<std::string> params;
    std::string expression;
};

/// Every closed form the evaluator knows, in id order.
const std::vector<ClosedFormInfo>& closed_forms();

/// Throws ParamsOutOfRange for an unknown id, missing parameters or values
/// outside the formula's stated range.
ClosedFormValue closed_form(const std::string& id, const FormulaParams& params);

/// What an instance compares the closed form against.
enum class OracleKind {
    /// kappa(C(G)) by every applicable engine.
    Kappa,
    /// The number of distinct noncentral centralizers t.
    CentralizerCount,
};

struct LedgerInstance {
    std::string formula;
    FormulaParams params;
    FamilySpec group;
    OracleKind oracle = OracleKind::Kappa;
};

struct OracleValue {
    std::string engine;
    BigNat value;
};

enum class Verdict { Match, Mismatch, OracleUnavailable };
std::string to_string(Verdict v);

struct LedgerEntry {
    std::string formula;
    FormulaParams params;
    std::string group;
    ClosedFormValue closed_form;
    std::vector<OracleValue> oracles;
    Verdict verdict = Verdict::OracleUnavailable;
    /// A mismatch the closed form is known to produce.
    bool expected = false;
    std::string note;
    std::optional<double> ms;
};

enum class LedgerScope { Default, Full };

std::vector<LedgerInstance> ledger_instances(LedgerScope scope);

/// Builds each group, runs every applicable engine and compares exactly.
/// Entries come back sorted by formula id, then parameters. `timings` fills
/// the per-entry runtime; it is off by default so reports are reproducible.
std::vector<LedgerEntry> verify_ledger(const std::vector<LedgerInstance>& instances, LedgerScope scope,
                                       bool timings = false);

/// Whether a mismatch for this formula is one of the documented discrepancies.
bool is_expected_mismatch(const std::string& formula, const FormulaParams& params);

}  // namespace commkappa
