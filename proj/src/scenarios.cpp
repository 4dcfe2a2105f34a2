#include "smclab/scenarios.hpp"

#include "smclab/protocols/hsiang.hpp"
#include "smclab/protocols/juang.hpp"
#include "smclab/protocols/kim.hpp"
#include "smclab/protocols/li.hpp"
#include "smclab/protocols/xu.hpp"

namespace smclab::scenarios {

using sim::Envelope;
using sim::Scenario;

namespace {

BytesView view(const Bytes& b) {
    return BytesView(b.data(), b.size());
}

BytesView view(std::string_view s) {
    return BytesView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

// ---- juang ---------------------------------------------------------------

struct JuangSetup {
    crypto::Rng server_rng;
    crypto::Rng user_rng;
    crypto::Rng attacker_rng;
    juang::ServerState server;
    juang::Card card;
};

JuangSetup juang_setup(const Scenario& sc, const Options& opt) {
    JuangSetup s{sc.fork_rng("server"), sc.fork_rng("user"), sc.fork_rng("attacker"), {}, {}};
    s.server = juang::setup(opt.creds.server_id, s.server_rng);
    crypto::Digest b = s.user_rng.digest();
    crypto::Digest hpwb = juang::password_commitment(opt.creds.password, b);
    auto card = juang::register_user(s.server, opt.creds.user_id, hpwb, b, s.server_rng);
    if (!card) throw sim::ScenarioError("juang registration failed");
    s.card = std::move(*card);
    return s;
}

HonestOutcome honest_juang(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    JuangSetup s = juang_setup(sc, opt);

    HonestOutcome out;
    std::optional<juang::UserSession> usess;
    std::optional<juang::ServerSession> ssess;
    bool server_ok = false;
    bool user_ok = false;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        BytesView p = view(env.payload);
        if (auto login = juang::decode_login(p)) {
            auto resp = juang::server_respond(s.server, *login, s.server_rng);
            if (!resp) {
                out.reject_reason = "server_reject";
                return;
            }
            ssess = std::move(resp->second);
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, juang::encode(resp->first));
        } else if (auto fin = juang::decode_user_auth(p)) {
            if (ssess && juang::server_accept(*ssess, *fin)) {
                server_ok = true;
            } else if (out.reject_reason.empty()) {
                out.reject_reason = "server_reject";
            }
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto auth = juang::decode_server_auth(view(env.payload))) {
            auto fin = juang::user_finish(*usess, s.card, c.password, *auth);
            if (!fin) {
                out.reject_reason = "user_reject";
                return;
            }
            out.user_sk = fin->sk;
            user_ok = true;
            scn.advance_clock(opt.transit);
            scn.send(c.user_id, c.server_id, juang::encode(fin->msg));
        }
    });
    sc.give_card(c.user_id, juang::card_bytes(s.card));

    auto [login, sess] = juang::login_start(s.card, c.password, c.user_id, c.server_id,
                                            s.server.p_s, s.user_rng);
    usess = std::move(sess);
    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id, juang::encode(login));

    out.accepted = server_ok && user_ok;
    if (ssess) out.server_sk = ssess->sk;
    out.transcript = sc.transcript();
    return out;
}

AttackOutcome attack_juang(const std::vector<std::string>& dictionary, const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    JuangSetup s = juang_setup(sc, opt);

    AttackOutcome out;
    std::optional<juang::ServerSession> ssess;
    bool masquerade_ok = false;
    std::optional<juang::ServerAuthMsg> reply_slot;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        BytesView p = view(env.payload);
        if (auto login = juang::decode_login(p)) {
            auto resp = juang::server_respond(s.server, *login, s.server_rng);
            if (!resp) return;
            ssess = std::move(resp->second);
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, juang::encode(resp->first));
        } else if (auto fin = juang::decode_user_auth(p)) {
            if (ssess) masquerade_ok = juang::server_accept(*ssess, *fin);
        }
    });
    sc.register_party(c.user_id);
    sc.register_party(c.attacker_id, [&](Scenario&, const Envelope& env) {
        if (auto auth = juang::decode_server_auth(view(env.payload))) reply_slot = *auth;
    });
    sc.set_adversary(c.attacker_id, {});
    sc.give_card(c.user_id, juang::card_bytes(s.card));

    auto stolen = juang::parse_card(view(sc.extract_card(c.user_id)));
    if (!stolen) throw sim::ScenarioError("stolen card failed to parse");

    juang::ServerOracle oracle = [&](const juang::LoginMsg& m) {
        reply_slot.reset();
        sc.advance_clock(opt.transit);
        sc.send(c.attacker_id, c.server_id, juang::encode(m));
        return reply_slot;
    };
    auto guess = juang::offline_guess(*stolen, c.user_id, c.server_id, s.server.p_s, dictionary,
                                      oracle, s.attacker_rng);

    out.sent_to_server = sc.transcript().count_from_to(c.attacker_id, c.server_id);
    out.received_from_server = sc.transcript().count_from_to(c.server_id, c.attacker_id);
    out.login_requests_sent = out.sent_to_server;
    out.guesses_tried = guess.guesses_tried;

    if (!guess.found) {
        out.not_found = true;
        out.detail = "password not in dictionary";
        out.transcript = sc.transcript();
        return out;
    }
    out.recovered_password = guess.password;

    // Masquerade: a fresh, fully honest-looking login with the recovered
    // password and the stolen card.
    auto [login, usess] = juang::login_start(*stolen, guess.password, c.user_id, c.server_id,
                                             s.server.p_s, s.attacker_rng);
    reply_slot.reset();
    sc.advance_clock(opt.transit);
    sc.send(c.attacker_id, c.server_id, juang::encode(login));
    if (reply_slot) {
        auto fin = juang::user_finish(usess, *stolen, guess.password, *reply_slot);
        if (fin) {
            sc.advance_clock(opt.transit);
            sc.send(c.attacker_id, c.server_id, juang::encode(fin->msg));
        }
    }
    out.masquerade_accepted = masquerade_ok;
    out.succeeded = guess.found && masquerade_ok;
    out.transcript = sc.transcript();
    return out;
}

RegistrationOutcome registration_juang(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    JuangSetup s{sc.fork_rng("server"), sc.fork_rng("user"), sc.fork_rng("attacker"), {}, {}};
    s.server = juang::setup(c.server_id, s.server_rng);

    RegistrationOutcome out;
    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto reg = juang::decode_register(view(env.payload))) {
            auto card = juang::register_user(s.server, reg->user_id, reg->hpwb, reg->b,
                                             s.server_rng);
            if (!card) return;
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, juang::encode(juang::CardIssueMsg{*card}));
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto issue = juang::decode_card_issue(view(env.payload))) {
            scn.give_card(c.user_id, juang::card_bytes(issue->card));
            out.completed = true;
        }
    });

    crypto::Digest b = s.user_rng.digest();
    juang::RegisterMsg reg{c.user_id, juang::password_commitment(c.password, b), b};
    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id, juang::encode(reg));

    out.password_in_payload = sc.transcript().any_payload_contains(view(c.password));
    out.transcript = sc.transcript();
    return out;
}

// ---- hsiang / kim ----------------------------------------------------------

HonestOutcome honest_card_roundtrip(ProtocolId p, const Options& opt) {
    Scenario sc(opt.seed);
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng user_rng = sc.fork_rng("user");
    const std::string& pw = opt.creds.password;
    std::string new_pw = pw + "-new";

    HonestOutcome out;
    bool ok = false;
    if (p == ProtocolId::hsiang) {
        crypto::Digest secret = server_rng.digest();
        crypto::Digest b = user_rng.digest();
        hsiang::Card card = hsiang::card_init(secret, b, pw);
        ok = hsiang::verify_password(card, pw);
        auto changed = hsiang::change_password(card, pw, new_pw);
        ok = ok && changed && hsiang::verify_password(*changed, new_pw) &&
             !hsiang::verify_password(*changed, pw);
        if (ok) {
            auto back = hsiang::change_password(*changed, new_pw, pw);
            ok = back && hsiang::verify_password(*back, pw);
        }
    } else {
        crypto::Digest x = server_rng.digest();
        crypto::Digest n = server_rng.digest();
        kim::Card card = kim::card_init(opt.creds.user_id, x, n, pw);
        ok = kim::verify_password(card, pw);
        auto changed = kim::change_password(card, pw, new_pw);
        ok = ok && changed && kim::verify_password(*changed, new_pw) &&
             !kim::verify_password(*changed, pw);
        if (ok) {
            auto back = kim::change_password(*changed, new_pw, pw);
            ok = back && kim::verify_password(*back, pw);
        }
    }
    out.accepted = ok;
    if (!ok) out.reject_reason = "roundtrip_failed";
    out.transcript = sc.transcript();
    return out;
}

AttackOutcome attack_card_local(ProtocolId p, const std::vector<std::string>& dictionary,
                                const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng user_rng = sc.fork_rng("user");

    sc.register_party(c.user_id);
    sc.register_party(c.attacker_id);
    sc.set_adversary(c.attacker_id, {});

    AttackOutcome out;
    if (p == ProtocolId::hsiang) {
        crypto::Digest secret = server_rng.digest();
        crypto::Digest b = user_rng.digest();
        sc.give_card(c.user_id, hsiang::card_bytes(hsiang::card_init(secret, b, c.password)));
        auto stolen = hsiang::parse_card(view(sc.extract_card(c.user_id)));
        if (!stolen) throw sim::ScenarioError("stolen card failed to parse");
        auto guess = hsiang::offline_guess(*stolen, dictionary);
        out.guesses_tried = guess.guesses_tried;
        out.succeeded = guess.found;
        out.recovered_password = guess.password;
        out.not_found = !guess.found;
    } else {
        crypto::Digest x = server_rng.digest();
        crypto::Digest n = server_rng.digest();
        sc.give_card(c.user_id, kim::card_bytes(kim::card_init(c.user_id, x, n, c.password)));
        auto stolen = kim::parse_card(view(sc.extract_card(c.user_id)));
        if (!stolen) throw sim::ScenarioError("stolen card failed to parse");
        auto guess = kim::offline_guess(*stolen, dictionary);
        out.guesses_tried = guess.guesses_tried;
        out.succeeded = guess.found;
        out.recovered_password = guess.password;
        out.not_found = !guess.found;
    }
    if (out.not_found) out.detail = "password not in dictionary";
    out.transcript = sc.transcript();
    return out;
}

// ---- xu --------------------------------------------------------------------

HonestOutcome honest_xu(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng user_rng = sc.fork_rng("user");

    xu::ServerState server{server_rng.scalar(), opt.delta_t, c.server_id, {}};
    auto card = xu::register_user(server, c.user_id, c.password);
    if (!card) throw sim::ScenarioError("xu registration failed");

    HonestOutcome out;
    std::optional<xu::UserSession> usess;
    std::optional<xu::ServerSession> ssess;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto login = xu::decode_login(view(env.payload))) {
            auto result = xu::authenticate(server, *login, scn.now(), server_rng);
            if (std::holds_alternative<xu::Reject>(result)) {
                out.reject_reason = std::string(xu::to_string(std::get<xu::Reject>(result)));
                return;
            }
            auto& [msg, sess] = std::get<std::pair<xu::ServerMsg, xu::ServerSession>>(result);
            ssess = std::move(sess);
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, xu::encode(msg));
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto msg = xu::decode_server(view(env.payload))) {
            auto result = xu::user_finish(*usess, *msg, scn.now());
            if (std::holds_alternative<xu::Reject>(result)) {
                out.reject_reason = std::string(xu::to_string(std::get<xu::Reject>(result)));
                return;
            }
            out.user_sk = std::get<crypto::Digest>(result);
        }
    });
    sc.give_card(c.user_id, xu::card_bytes(*card));

    auto [login, sess] = xu::login(*card, c.password, sc.now(), opt.delta_t, user_rng);
    usess = std::move(sess);
    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id, xu::encode(login));

    if (ssess) out.server_sk = ssess->sk;
    out.accepted = ssess && ssess->accepted && out.user_sk.has_value();
    out.transcript = sc.transcript();
    return out;
}

AttackOutcome attack_xu_insider(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng insider_rng = sc.fork_rng("insider");

    xu::ServerState server{server_rng.scalar(), opt.delta_t, c.server_id, {}};
    auto target_card = xu::register_user(server, c.user_id, c.password);
    auto own_card = xu::register_user(server, c.insider_id, c.insider_password);
    if (!target_card || !own_card) throw sim::ScenarioError("xu registration failed");

    AttackOutcome out;
    std::optional<xu::ServerSession> ssess;
    std::optional<xu::ServerMsg> reply_slot;
    std::optional<xu::Reject> reject_slot;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto login = xu::decode_login(view(env.payload))) {
            auto result = xu::authenticate(server, *login, scn.now(), server_rng);
            if (std::holds_alternative<xu::Reject>(result)) {
                reject_slot = std::get<xu::Reject>(result);
                return;
            }
            auto& [msg, sess] = std::get<std::pair<xu::ServerMsg, xu::ServerSession>>(result);
            ssess = std::move(sess);
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, xu::encode(msg));
        }
    });
    sc.register_party(c.user_id);
    sc.register_party(c.insider_id, [&](Scenario&, const Envelope& env) {
        if (auto msg = xu::decode_server(view(env.payload))) reply_slot = *msg;
    });
    sc.set_adversary(c.insider_id, {});
    sc.give_card(c.user_id, xu::card_bytes(*target_card));
    sc.give_card(c.insider_id, xu::card_bytes(*own_card));

    xu::ServerOracle oracle =
        [&](const xu::LoginMsg& m) -> std::variant<xu::ServerMsg, xu::Reject> {
        reply_slot.reset();
        reject_slot.reset();
        sc.advance_clock(opt.transit);
        sc.send(c.insider_id, c.server_id, xu::encode(m));
        if (reply_slot) return *reply_slot;
        return reject_slot.value_or(xu::Reject::unknown_id);
    };

    auto result = xu::insider_attack(*own_card, c.insider_password, c.user_id, oracle, sc.now(),
                                     insider_rng);

    out.sent_to_server = sc.transcript().count_from_to(c.insider_id, c.server_id);
    out.received_from_server = sc.transcript().count_from_to(c.server_id, c.insider_id);
    out.login_requests_sent = out.sent_to_server;
    out.attacker_sk = result.attacker_sk;
    if (ssess) out.server_sk = ssess->sk;
    if (result.reject_reason) out.detail = std::string(xu::to_string(*result.reject_reason));
    out.succeeded = result.accepted && ssess && ssess->accepted && result.attacker_sk &&
                    out.server_sk && *result.attacker_sk == *out.server_sk;
    out.transcript = sc.transcript();
    return out;
}

RegistrationOutcome registration_xu(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");

    xu::ServerState server{server_rng.scalar(), opt.delta_t, c.server_id, {}};

    RegistrationOutcome out;
    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto reg = xu::decode_register(view(env.payload))) {
            auto card = xu::register_user(server, reg->user_id, reg->password);
            if (!card) return;
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, xu::encode(xu::CardIssueMsg{*card}));
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto issue = xu::decode_card_issue(view(env.payload))) {
            scn.give_card(c.user_id, xu::card_bytes(issue->card));
            out.completed = true;
        }
    });

    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id, xu::encode(xu::RegisterMsg{c.user_id, c.password}));

    out.password_in_payload = sc.transcript().any_payload_contains(view(c.password));
    out.transcript = sc.transcript();
    return out;
}

// ---- li --------------------------------------------------------------------

HonestOutcome honest_li(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng user_rng = sc.fork_rng("user");

    li::ServerState server{server_rng.digest(), {}};
    auto card = li::register_user(server, c.user_id, c.password, c.biometric);
    if (!card) throw sim::ScenarioError("li registration failed");

    HonestOutcome out;
    std::optional<li::UserSession> usess;
    std::optional<li::ServerSession> ssess;
    bool server_ok = false;
    bool user_ok = false;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        BytesView p = view(env.payload);
        if (auto login = li::decode_login(p)) {
            auto resp = li::server_respond(server, *login, server_rng);
            if (!resp) {
                out.reject_reason = "unknown_id";
                return;
            }
            ssess = std::move(resp->second);
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, li::encode(resp->first));
        } else if (auto fin = li::decode_response(p)) {
            if (ssess && li::server_accept(*ssess, *fin)) {
                server_ok = true;
            } else if (out.reject_reason.empty()) {
                out.reject_reason = "server_reject";
            }
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto challenge = li::decode_challenge(view(env.payload))) {
            auto resp = li::user_finish(*usess, *challenge);
            if (!resp) {
                out.reject_reason = "user_reject";
                return;
            }
            user_ok = true;
            scn.advance_clock(opt.transit);
            scn.send(c.user_id, c.server_id, li::encode(*resp));
        }
    });
    sc.give_card(c.user_id, li::card_bytes(*card));

    auto started = li::login_start(*card, c.password, c.biometric, user_rng);
    if (!started) {
        out.reject_reason = "biometric_mismatch";
        out.transcript = sc.transcript();
        return out;
    }
    usess = std::move(started->second);
    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id, li::encode(started->first));

    out.accepted = server_ok && user_ok;
    out.transcript = sc.transcript();
    return out;
}

AttackOutcome attack_li(const std::vector<std::string>& dictionary, const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");
    crypto::Rng attacker_rng = sc.fork_rng("attacker");

    li::ServerState server{server_rng.digest(), {}};
    auto card = li::register_user(server, c.user_id, c.password, c.biometric);
    if (!card) throw sim::ScenarioError("li registration failed");

    AttackOutcome out;
    std::optional<li::ChallengeMsg> reply_slot;

    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto login = li::decode_login(view(env.payload))) {
            auto resp = li::server_respond(server, *login, server_rng);
            if (!resp) return;
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, li::encode(resp->first));
        }
    });
    sc.register_party(c.user_id);
    sc.register_party(c.attacker_id, [&](Scenario&, const Envelope& env) {
        if (auto msg = li::decode_challenge(view(env.payload))) reply_slot = *msg;
    });
    sc.set_adversary(c.attacker_id, {});
    sc.give_card(c.user_id, li::card_bytes(*card));

    auto stolen = li::parse_card(view(sc.extract_card(c.user_id)));
    if (!stolen) throw sim::ScenarioError("stolen card failed to parse");

    li::ServerOracle oracle = [&](const li::LoginMsg& m) {
        reply_slot.reset();
        sc.advance_clock(opt.transit);
        sc.send(c.attacker_id, c.server_id, li::encode(m));
        return reply_slot;
    };
    auto guess = li::offline_guess(*stolen, dictionary, oracle, attacker_rng);

    out.sent_to_server = sc.transcript().count_from_to(c.attacker_id, c.server_id);
    out.received_from_server = sc.transcript().count_from_to(c.server_id, c.attacker_id);
    out.login_requests_sent = guess.login_requests_sent;
    out.guesses_tried = guess.guesses_tried;
    out.recovered_password = guess.password;
    out.succeeded = guess.found;
    out.not_found = !guess.found;
    if (out.not_found) out.detail = "password not in dictionary";
    out.transcript = sc.transcript();
    return out;
}

RegistrationOutcome registration_li(const Options& opt) {
    Scenario sc(opt.seed);
    const Credentials& c = opt.creds;
    crypto::Rng server_rng = sc.fork_rng("server");

    li::ServerState server{server_rng.digest(), {}};

    RegistrationOutcome out;
    sc.register_party(c.server_id, [&](Scenario& scn, const Envelope& env) {
        if (auto reg = li::decode_register(view(env.payload))) {
            auto card = li::register_user(server, reg->user_id, reg->password, reg->biometric);
            if (!card) return;
            scn.advance_clock(opt.transit);
            scn.send(c.server_id, env.from, li::encode(li::CardIssueMsg{*card}));
        }
    });
    sc.register_party(c.user_id, [&](Scenario& scn, const Envelope& env) {
        if (auto issue = li::decode_card_issue(view(env.payload))) {
            scn.give_card(c.user_id, li::card_bytes(issue->card));
            out.completed = true;
        }
    });

    sc.advance_clock(opt.transit);
    sc.send(c.user_id, c.server_id,
            li::encode(li::RegisterMsg{c.user_id, c.password, c.biometric}));

    out.password_in_payload = sc.transcript().any_payload_contains(view(c.password));
    out.transcript = sc.transcript();
    return out;
}

}  // namespace

Options default_options(ProtocolId p) {
    Options opt;
    switch (p) {
        case ProtocolId::juang: opt.creds.password = "sunshine12"; break;
        case ProtocolId::hsiang: opt.creds.password = "starwars21"; break;
        case ProtocolId::kim: opt.creds.password = "butterfly05"; break;
        case ProtocolId::xu:
            opt.creds.password = "computer17";
            opt.creds.insider_password = "whatever09";
            break;
        case ProtocolId::li: opt.creds.password = "princess33"; break;
    }
    return opt;
}

HonestOutcome honest_run(ProtocolId p, const Options& opt) {
    switch (p) {
        case ProtocolId::juang: return honest_juang(opt);
        case ProtocolId::hsiang:
        case ProtocolId::kim: return honest_card_roundtrip(p, opt);
        case ProtocolId::xu: return honest_xu(opt);
        case ProtocolId::li: return honest_li(opt);
    }
    throw sim::ScenarioError("unknown protocol");
}

RegistrationOutcome registration_run(ProtocolId p, const Options& opt) {
    switch (p) {
        case ProtocolId::juang: return registration_juang(opt);
        case ProtocolId::xu: return registration_xu(opt);
        case ProtocolId::li: return registration_li(opt);
        case ProtocolId::hsiang:
        case ProtocolId::kim: {
            // Card-local schemes: provisioning happens out of band.
            RegistrationOutcome out;
            out.completed = true;
            return out;
        }
    }
    throw sim::ScenarioError("unknown protocol");
}

AttackOutcome attack_run(ProtocolId p, const std::vector<std::string>& dictionary,
                         const Options& opt) {
    switch (p) {
        case ProtocolId::juang: return attack_juang(dictionary, opt);
        case ProtocolId::hsiang:
        case ProtocolId::kim: return attack_card_local(p, dictionary, opt);
        case ProtocolId::xu: return attack_xu_insider(opt);
        case ProtocolId::li: return attack_li(dictionary, opt);
    }
    throw sim::ScenarioError("unknown protocol");
}

}  // namespace smclab::scenarios
