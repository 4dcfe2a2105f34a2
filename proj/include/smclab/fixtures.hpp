#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/scenarios.hpp"

// Shared test corpus: the demo dictionary, named scenario fixtures loaded
// from JSON files, and deterministic replay against their expected outcomes.

namespace smclab::fixtures {

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1000 distinct dictionary entries (common-word stems with numeric
/// suffixes). data/dictionary.txt in the repo mirrors this list verbatim.
const std::vector<std::string>& demo_dictionary();

/// Reads a dictionary file: one candidate per line, UTF-8, order significant,
/// trailing newline optional. Blank lines are skipped.
std::vector<std::string> load_dictionary_file(const std::filesystem::path& path);

struct ExpectedOutcome {
    // "mutual_acceptance" | "roundtrip" | "found_password" |
    // "impersonation_accepted" | "not_found"
    std::string outcome;
    std::optional<std::size_t> login_requests;
    std::optional<std::size_t> online_messages;  // envelopes each way, summed
};

struct ScenarioFixture {
    std::string name;
    ProtocolId protocol = ProtocolId::juang;
    std::string kind;  // "honest" | "attack"
    std::uint64_t seed = 0;
    sim::Ticks delta_t = 5;
    scenarios::Credentials creds;
    std::string dictionary;  // "demo" or a path relative to the corpus dir
    ExpectedOutcome expected;
    std::filesystem::path corpus_dir;
};

/// Loads <corpus_dir>/<name>.json. Throws FixtureError on unknown names or
/// malformed files.
ScenarioFixture load_fixture(const std::string& name, const std::filesystem::path& corpus_dir);

struct ReplayResult {
    bool matched = false;
    std::string detail;
};

/// Runs the fixture and compares against its expected outcome. seed_override
/// replaces the pinned seed (outcomes in this corpus are seed-independent).
ReplayResult replay(const ScenarioFixture& fixture,
                    std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace smclab::fixtures
