#include "smclab/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace smclab::fixtures {

const std::vector<std::string>& demo_dictionary() {
    static const std::vector<std::string> dict = [] {
        static const char* stems[] = {
            "password", "sunshine", "football",  "baseball",  "dragonfly",
            "butterfly", "shadowfax", "mastermind", "monkeybar", "mustang",
            "letmein",  "freedom",  "whatever",  "trustno",   "princess",
            "starwars", "computer", "michelle",  "jessica",   "peppercorn",
            "gingersnap", "hannah", "summer",    "winter",    "autumnleaf",
        };
        std::vector<std::string> out;
        out.reserve(1000);
        for (const char* stem : stems) {
            for (int i = 0; i < 40; ++i) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%s%02d", stem, i);
                out.emplace_back(buf);
            }
        }
        return out;
    }();
    return dict;
}

std::vector<std::string> load_dictionary_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open dictionary file: " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

ScenarioFixture load_fixture(const std::string& name, const std::filesystem::path& corpus_dir) {
    std::filesystem::path path = corpus_dir / (name + ".json");
    std::ifstream in(path);
    if (!in) throw FixtureError("unknown fixture: " + name + " (no file " + path.string() + ")");

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + name + ": " + e.what());
    }

    try {
        ScenarioFixture f;
        f.name = j.at("name").get<std::string>();
        auto protocol = parse_protocol(j.at("protocol").get<std::string>());
        if (!protocol) throw FixtureError("fixture " + name + ": unknown protocol");
        f.protocol = *protocol;
        f.kind = j.at("kind").get<std::string>();
        f.seed = j.at("seed").get<std::uint64_t>();
        f.delta_t = j.value("delta_t", std::uint64_t{5});
        f.dictionary = j.value("dictionary", std::string{});

        for (const auto& party : j.at("parties")) {
            std::string role = party.at("role").get<std::string>();
            std::string id = party.at("id").get<std::string>();
            if (role == "server") {
                f.creds.server_id = id;
            } else if (role == "user" || role == "victim" || role == "target") {
                f.creds.user_id = id;
                f.creds.password = party.value("password", std::string{});
                if (party.contains("biometric")) {
                    f.creds.biometric = party.at("biometric").get<std::string>();
                }
            } else if (role == "attacker") {
                f.creds.attacker_id = id;
            } else if (role == "insider") {
                f.creds.insider_id = id;
                f.creds.insider_password = party.value("password", std::string{});
            } else {
                throw FixtureError("fixture " + name + ": unknown role " + role);
            }
        }

        const auto& exp = j.at("expected");
        f.expected.outcome = exp.at("outcome").get<std::string>();
        if (exp.contains("login_requests")) {
            f.expected.login_requests = exp.at("login_requests").get<std::size_t>();
        }
        if (exp.contains("online_messages")) {
            f.expected.online_messages = exp.at("online_messages").get<std::size_t>();
        }
        f.corpus_dir = corpus_dir;
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + name + ": " + e.what());
    }
}

ReplayResult replay(const ScenarioFixture& fixture, std::optional<std::uint64_t> seed_override) {
    scenarios::Options opt = scenarios::default_options(fixture.protocol);
    opt.creds = fixture.creds;
    opt.seed = seed_override.value_or(fixture.seed);
    opt.delta_t = fixture.delta_t;
    if (fixture.creds.password.empty()) {
        opt.creds.password = scenarios::default_options(fixture.protocol).creds.password;
    }
    if (fixture.protocol == ProtocolId::xu && fixture.creds.insider_password.empty()) {
        opt.creds.insider_password =
            scenarios::default_options(fixture.protocol).creds.insider_password;
    }

    ReplayResult out;
    if (fixture.kind == "honest") {
        auto honest = scenarios::honest_run(fixture.protocol, opt);
        bool keyed = fixture.protocol == ProtocolId::juang || fixture.protocol == ProtocolId::xu;
        bool keys_ok = !keyed || (honest.user_sk && honest.server_sk &&
                                  *honest.user_sk == *honest.server_sk);
        if (fixture.expected.outcome == "mutual_acceptance" ||
            fixture.expected.outcome == "roundtrip") {
            if (honest.accepted && keys_ok) {
                out.matched = true;
            } else {
                out.detail = "expected acceptance, got reject: " + honest.reject_reason;
            }
        } else {
            out.detail = std::string("unsupported expected outcome for honest fixture");
        }
        return out;
    }

    if (fixture.kind != "attack") {
        out.detail = std::string("unknown fixture kind: " + fixture.kind);
        return out;
    }

    std::vector<std::string> dict;
    if (fixture.dictionary == "demo") {
        dict = demo_dictionary();
    } else if (!fixture.dictionary.empty()) {
        dict = load_dictionary_file(fixture.corpus_dir / fixture.dictionary);
    }

    auto attack = scenarios::attack_run(fixture.protocol, dict, opt);

    if (fixture.expected.login_requests &&
        attack.login_requests_sent != *fixture.expected.login_requests) {
        out.detail = "login_requests_sent == " + std::to_string(attack.login_requests_sent);
        return out;
    }
    if (fixture.expected.online_messages &&
        attack.transcript.network_envelope_count() != *fixture.expected.online_messages) {
        out.detail = "online envelopes == " + std::to_string(attack.transcript.network_envelope_count());
        return out;
    }

    if (fixture.expected.outcome == "found_password") {
        if (attack.succeeded && attack.recovered_password == opt.creds.password) {
            out.matched = true;
        } else {
            out.detail = std::string("expected found_password of the registered password");
        }
    } else if (fixture.expected.outcome == "impersonation_accepted") {
        if (attack.succeeded) {
            out.matched = true;
        } else {
            out.detail = "expected accepted impersonation: " + attack.detail;
        }
    } else if (fixture.expected.outcome == "not_found") {
        if (attack.not_found) {
            out.matched = true;
        } else {
            out.detail = std::string("expected not_found");
        }
    } else {
        out.detail = std::string("unsupported expected outcome for attack fixture");
    }
    return out;
}

}  // namespace smclab::fixtures
