// smclab — run honest sessions, attacks, and the full evaluation for the five
// smart-card password authentication schemes in this lab.
//
// Exit codes: 0 success; 2 usage or configuration error; 3 rejection, failed
// attack goal, or verdict mismatch; 4 password not found in the dictionary.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "smclab/evaluation.hpp"
#include "smclab/fixtures.hpp"
#include "smclab/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRejected = 3;
constexpr int kExitNotFound = 4;

using smclab::ProtocolId;

struct CliConfig {
    std::string protocol;
    std::string dictionary_path;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::uint64_t delta_t = 5;
};

std::string hex_or_dash(const std::optional<smclab::crypto::Digest>& d) {
    return d ? smclab::crypto::to_hex(*d) : std::string("-");
}

int cmd_honest(const CliConfig& cfg, ProtocolId protocol) {
    auto opt = smclab::scenarios::default_options(protocol);
    opt.seed = cfg.seed;
    opt.delta_t = cfg.delta_t;
    auto outcome = smclab::scenarios::honest_run(protocol, opt);

    bool keyed = protocol == ProtocolId::juang || protocol == ProtocolId::xu;
    bool keys_ok = !keyed || (outcome.user_sk && outcome.server_sk &&
                              *outcome.user_sk == *outcome.server_sk);

    if (cfg.format == "structured") {
        std::cout << outcome.transcript.export_text();
        std::cout << "result accepted=" << (outcome.accepted ? 1 : 0) << " reason="
                  << (outcome.reject_reason.empty() ? "-" : outcome.reject_reason)
                  << " user_sk=" << hex_or_dash(outcome.user_sk)
                  << " server_sk=" << hex_or_dash(outcome.server_sk) << '\n';
    } else {
        std::cout << "protocol: " << to_string(protocol) << '\n';
        std::cout << "seed: " << cfg.seed << '\n';
        std::cout << "transcript (" << outcome.transcript.network_envelope_count()
                  << " envelopes):\n"
                  << outcome.transcript.export_text();
        if (outcome.accepted) {
            std::cout << "result: accepted\n";
        } else {
            std::cout << "result: rejected ("
                      << (outcome.reject_reason.empty() ? "unknown" : outcome.reject_reason)
                      << ")\n";
        }
        if (keyed) std::cout << "session_keys_match: " << (keys_ok ? "yes" : "no") << '\n';
    }
    return outcome.accepted && keys_ok ? kExitOk : kExitRejected;
}

int cmd_attack(const CliConfig& cfg, ProtocolId protocol) {
    std::vector<std::string> dictionary;
    if (protocol != ProtocolId::xu) {
        if (cfg.dictionary_path.empty()) {
            std::cerr << "error: --dictionary is required for the " << to_string(protocol)
                      << " guessing attack\n";
            return kExitConfig;
        }
        dictionary = smclab::fixtures::load_dictionary_file(cfg.dictionary_path);
    }

    auto opt = smclab::scenarios::default_options(protocol);
    opt.seed = cfg.seed;
    opt.delta_t = cfg.delta_t;
    auto outcome = smclab::scenarios::attack_run(protocol, dictionary, opt);

    if (cfg.format == "structured") {
        std::cout << outcome.transcript.export_text();
        std::cout << "result succeeded=" << (outcome.succeeded ? 1 : 0)
                  << " password=" << (outcome.recovered_password.empty()
                                          ? "-"
                                          : outcome.recovered_password)
                  << " guesses=" << outcome.guesses_tried
                  << " login_requests=" << outcome.login_requests_sent
                  << " sent=" << outcome.sent_to_server
                  << " received=" << outcome.received_from_server;
        if (protocol == ProtocolId::juang) {
            std::cout << " masquerade=" << (outcome.masquerade_accepted ? 1 : 0);
        }
        if (protocol == ProtocolId::xu) {
            std::cout << " attacker_sk=" << hex_or_dash(outcome.attacker_sk)
                      << " server_sk=" << hex_or_dash(outcome.server_sk);
        }
        std::cout << '\n';
    } else {
        std::cout << "protocol: " << to_string(protocol) << '\n';
        std::cout << "seed: " << cfg.seed << '\n';
        std::cout << "transcript (" << outcome.transcript.network_envelope_count()
                  << " online envelopes):\n"
                  << outcome.transcript.export_text();
        if (protocol == ProtocolId::xu) {
            std::cout << "result: "
                      << (outcome.succeeded ? "impersonation accepted"
                                            : "impersonation failed " + outcome.detail)
                      << '\n';
            std::cout << "session_keys_match: " << (outcome.succeeded ? "yes" : "no") << '\n';
        } else if (outcome.succeeded) {
            std::cout << "result: password recovered\n";
            std::cout << "password: " << outcome.recovered_password << '\n';
            std::cout << "guesses_tried: " << outcome.guesses_tried << '\n';
            std::cout << "online_messages_sent: " << outcome.sent_to_server << '\n';
            std::cout << "online_messages_received: " << outcome.received_from_server << '\n';
            if (protocol == ProtocolId::juang) {
                std::cout << "masquerade_accepted: "
                          << (outcome.masquerade_accepted ? "yes" : "no") << '\n';
            }
            if (protocol == ProtocolId::li) {
                std::cout << "login_requests_sent: " << outcome.login_requests_sent << '\n';
            }
        } else {
            std::cout << "result: " << (outcome.not_found ? "password not in dictionary"
                                                          : "attack failed " + outcome.detail)
                      << '\n';
        }
    }
    if (outcome.succeeded) return kExitOk;
    return outcome.not_found ? kExitNotFound : kExitRejected;
}

int cmd_evaluate(const CliConfig& cfg) {
    auto matrix = smclab::evaluation::run_attack_scenarios(cfg.seed);
    auto format = cfg.format == "structured" ? smclab::evaluation::RenderFormat::structured
                                             : smclab::evaluation::RenderFormat::text;
    std::cout << smclab::evaluation::render_matrix(matrix, format);
    auto mismatch = smclab::evaluation::first_fixture_mismatch(matrix);
    if (cfg.format != "structured") {
        if (mismatch) {
            std::cout << "conclusions: MISMATCH at " << *mismatch << '\n';
        } else {
            std::cout << "conclusions: all attested cells match\n";
        }
    }
    return mismatch ? kExitRejected : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "smclab: smart-card password authentication protocol lab\n"
        "Exit codes: 0 success, 2 configuration error, 3 rejection or failed\n"
        "attack goal or verdict mismatch, 4 password not in dictionary."};
    app.require_subcommand(1);

    CliConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool with_protocol, bool with_dictionary) {
        if (with_protocol) {
            sub->add_option("--protocol", cfg.protocol, "one of: juang, hsiang, kim, xu, li")
                ->required();
        }
        if (with_dictionary) {
            sub->add_option("--dictionary", cfg.dictionary_path,
                            "candidate password file, one per line (ignored for xu)");
        }
        sub->add_option("--seed", cfg.seed, "scenario seed (default 0)");
        sub->add_option("--format", cfg.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--delta-t", cfg.delta_t, "timestamp acceptance window in ticks");
    };

    CLI::App* honest = app.add_subcommand("honest", "run the honest flow for one protocol");
    add_common(honest, true, false);
    CLI::App* attack = app.add_subcommand("attack", "run the attack for one protocol");
    add_common(attack, true, true);
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "run every scenario and print the verdict matrix");
    add_common(evaluate, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (evaluate->parsed()) return cmd_evaluate(cfg);

        auto protocol = smclab::parse_protocol(cfg.protocol);
        if (!protocol) {
            std::cerr << "error: unknown protocol \"" << cfg.protocol << "\"\n";
            return kExitConfig;
        }
        if (honest->parsed()) return cmd_honest(cfg, *protocol);
        if (attack->parsed()) return cmd_attack(cfg, *protocol);
        return kExitConfig;
    } catch (const smclab::fixtures::FixtureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const smclab::sim::ScenarioError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const smclab::evaluation::EvaluationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnexpected;
    }
}
