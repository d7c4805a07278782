#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linarr/lattice.hpp"
#include "linarr/parse.hpp"
#include "linarr/projective.hpp"
#include "linarr/syzygy.hpp"
#include "linarr/unexpected.hpp"

namespace linarr {

enum class Format { json, table };

/// Input resolved to the dual pair. Construction failures (duplicates,
/// unknown catalog names, bad parameters) surface as ParseError.
struct ResolvedInput {
    Arrangement arrangement;
    PointSet points;
    InputKind kind;
    std::string label;
};

ResolvedInput resolve_input(const InputDocument& doc);

struct ReportOptions {
    bool with_oracle = false;
    bool force_deletions = false;
    std::uint64_t seed = 0;
    OracleBudget budget;
};

/// Everything the analyzer knows about one input, assembled once and
/// serialized deterministically (schema_version 1).
struct ReportDocument {
    std::string label;
    InputKind kind = InputKind::lines;
    unsigned d = 0;
    std::vector<std::array<std::string, 3>> entries;

    unsigned m = 0;
    std::map<unsigned, unsigned> nk;
    std::size_t lattice_point_count = 0;
    std::string arnold_exponent_min;
    std::vector<std::array<std::string, 3>> modular_pts;
    bool supersolvable = false;

    SyzygyWitness witness;
    NumericInvariants invariants;
    std::optional<bool> supersolvable_numeric;

    UnexpectedReport unexpected;

    std::optional<CrossValidation> oracle;
    std::vector<std::string> warnings;
};

ReportDocument build_report(const ResolvedInput& input, const ReportOptions& opt = {});

std::string emit_report(const ReportDocument& rep, Format format);

/// Arrangement as a re-parseable "lines:" document.
std::string emit_arrangement_document(const Arrangement& a,
                                      const std::vector<std::string>& comments = {});

} // namespace linarr
