#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smclab/common.hpp"

// Scores the five schemes against the ten classic requirements for
// smart-card password authentication. Every "violated" cell is backed by an
// executed scenario; cells nothing in this lab can demonstrate stay
// not_evaluated rather than being guessed.

namespace smclab::evaluation {

enum class ReqId { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10 };

inline constexpr std::array<ReqId, 10> kAllRequirements = {
    ReqId::R1, ReqId::R2, ReqId::R3, ReqId::R4, ReqId::R5,
    ReqId::R6, ReqId::R7, ReqId::R8, ReqId::R9, ReqId::R10};

struct Requirement {
    ReqId id;
    std::string_view description;
};

const std::array<Requirement, 10>& requirements();
std::string_view to_string(ReqId r);
std::optional<ReqId> parse_requirement(std::string_view name);

enum class Status { violated, satisfied_by_demonstration, not_evaluated };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view name);

struct Evidence {
    std::string kind;    // e.g. "found_password", "insider_impersonation"
    std::string detail;  // human-readable summary of the executed scenario
    std::uint64_t seed = 0;
};

struct Verdict {
    Status status = Status::not_evaluated;
    std::vector<Evidence> evidence;
};

class VerdictMatrix {
public:
    Verdict& cell(ProtocolId p, ReqId r);
    const Verdict& cell(ProtocolId p, ReqId r) const;

private:
    std::array<std::array<Verdict, 10>, 5> cells_{};
};

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs, per protocol, one honest scenario plus its attack (and the
/// registration-payload scan where relevant) and fills the matrix. Throws
/// EvaluationError naming protocol, requirement and seed if any scenario
/// fails to produce its expected evidence.
VerdictMatrix run_attack_scenarios(std::uint64_t seed);

enum class RenderFormat { text, structured };

/// Deterministic rendering. The structured form emits one record per cell:
/// "<protocol> <requirement> <status> <evidence-kinds|-> <seed|->".
/// Refuses (throws) on a violated cell with no attached evidence.
std::string render_matrix(const VerdictMatrix& m, RenderFormat format);

/// Parses the structured rendering back; evidence details are not retained,
/// kinds and seeds are. nullopt on malformed input.
std::optional<VerdictMatrix> parse_structured(std::string_view text);

struct ExpectedCell {
    ProtocolId protocol;
    ReqId requirement;
    Status status;
};

/// The attested conclusions: R10 falls for juang/hsiang/kim/li; xu violates
/// R3 and R5.
std::span<const ExpectedCell> conclusion_fixture();

/// nullopt when every fixture cell matches; otherwise names the first
/// mismatching cell.
std::optional<std::string> first_fixture_mismatch(const VerdictMatrix& m);

}  // namespace smclab::evaluation
