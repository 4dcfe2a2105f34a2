#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"
#include "smclab/simnet.hpp"

// Scripted scenario drivers: the honest flow, the network registration
// ceremony, and the attack for each protocol, all run over a seeded Scenario
// so the transcripts and outcomes are reproducible byte for byte.
//
// Registration for honest and attack runs happens out of band (cards are
// placed directly); only the login-phase traffic appears in those
// transcripts. registration_run() performs registration over the simulated
// network instead, which is what the cleartext-password scan inspects.

namespace smclab::scenarios {

struct Credentials {
    PartyId server_id = "S";
    PartyId user_id = "C";
    PartyId attacker_id = "E";
    PartyId insider_id = "U";
    std::string password;
    std::string biometric = "left-thumb-ridge-map-01";
    std::string insider_password;
};

struct Options {
    std::uint64_t seed = 0;
    sim::Ticks delta_t = 5;   // xu acceptance window
    sim::Ticks transit = 1;   // clock ticks consumed per network hop
    Credentials creds;
};

/// Options with the per-protocol demo credentials filled in.
Options default_options(ProtocolId p);

struct HonestOutcome {
    bool accepted = false;
    std::string reject_reason;
    std::optional<crypto::Digest> user_sk;
    std::optional<crypto::Digest> server_sk;
    sim::Transcript transcript;
};

/// juang/xu/li: full login flow over the network, mutual acceptance.
/// hsiang/kim: card-local verify + change-password round trip.
HonestOutcome honest_run(ProtocolId p, const Options& opt);

struct RegistrationOutcome {
    bool completed = false;
    bool password_in_payload = false;
    sim::Transcript transcript;
};

/// Runs the registration ceremony over the network (juang/xu/li) and scans
/// the transcript for the literal password bytes. hsiang/kim have no
/// registration flow in this lab; their outcome has an empty transcript.
RegistrationOutcome registration_run(ProtocolId p, const Options& opt);

struct AttackOutcome {
    bool succeeded = false;       // the attack reached its stated goal
    bool not_found = false;       // dictionary exhausted without a match
    std::string detail;
    std::string recovered_password;
    std::size_t guesses_tried = 0;
    std::size_t sent_to_server = 0;       // attack phase only
    std::size_t received_from_server = 0; // attack phase only
    std::size_t login_requests_sent = 0;
    bool masquerade_accepted = false;                 // juang
    std::optional<crypto::Digest> attacker_sk;        // xu
    std::optional<crypto::Digest> server_sk;          // xu
    sim::Transcript transcript;
};

/// juang/hsiang/kim/li: lost-card dictionary attack (dictionary required).
/// xu: insider impersonation (dictionary ignored).
AttackOutcome attack_run(ProtocolId p, const std::vector<std::string>& dictionary,
                         const Options& opt);

}  // namespace smclab::scenarios
