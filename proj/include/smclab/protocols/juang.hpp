#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"

// Juang-scheme password-authenticated key agreement over the pairing groups.
// The server holds two long-term secrets: a pairing exponent s (with public
// P_s = s*P) and a card-sealing key x. No per-user verifier is stored; the
// card carries everything, sealed under x.

namespace smclab::juang {

using crypto::Digest;
using crypto::G1Element;
using crypto::Scalar;
using crypto::SealedBox;
using crypto::SymKey;

enum class UserPhase { sent_login, done, rejected };
enum class ServerPhase { sent_auth, accepted, rejected };

struct ServerState {
    Scalar s;
    SymKey x;
    G1Element p_s;  // s * P, published
    PartyId server_id;
    std::set<PartyId> registered;
};

struct Card {
    Digest b;         // user-chosen random, stored in the clear
    SealedBox sealed;  // E_x[H(PW, b), ID, H(H(PW, b), ID)]
};

struct RegisterMsg {
    PartyId user_id;
    Digest hpwb;  // H(PW, b), computed user-side; the password itself never travels
    Digest b;
};

struct CardIssueMsg {
    Card card;
};

struct LoginMsg {
    G1Element a_p;
    SealedBox alpha;  // E_Ka[card.sealed]; the user's identity rides inside
};

struct ServerAuthMsg {
    Digest auth_s;
    Digest r;
};

struct UserAuthMsg {
    Digest auth_i;
};

struct UserSession {
    Scalar a;
    G1Element a_p;
    Digest ka;
    Digest hpwb;  // from the password typed at login
    PartyId user_id;
    PartyId server_id;
    UserPhase phase = UserPhase::sent_login;
    std::optional<Digest> sk;
};

struct ServerSession {
    Digest ka;
    Digest r;
    Digest sk;
    Digest hpwb;
    PartyId user_id;
    ServerPhase phase = ServerPhase::sent_auth;
};

ServerState setup(const PartyId& server_id, crypto::Rng& rng);

/// H(PW, b) — the only password-derived value the server ever sees.
Digest password_commitment(std::string_view pw, const Digest& b);

/// Issues a card for a new identity; nullopt when the id is already taken.
std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  const Digest& hpwb, const Digest& b, crypto::Rng& rng);

std::pair<LoginMsg, UserSession> login_start(const Card& card, std::string_view pw,
                                             const PartyId& user_id, const PartyId& server_id,
                                             const G1Element& p_s, crypto::Rng& rng);

/// Recomputes Ka from a*P via the pairing identity, opens alpha and the inner
/// sealed record, verifies the inner tag and registration, and answers with
/// Auth_s and a fresh r. nullopt on any decryption or tag failure.
std::optional<std::pair<ServerAuthMsg, ServerSession>> server_respond(const ServerState& server,
                                                                      const LoginMsg& msg,
                                                                      crypto::Rng& rng);

struct FinishResult {
    UserAuthMsg msg;
    Digest sk;
};

/// Verifies Auth_s against the typed password; on match answers with Auth_i
/// (same material, r incremented) and yields the session key.
std::optional<FinishResult> user_finish(UserSession& session, const Card& card,
                                        std::string_view pw, const ServerAuthMsg& msg);

bool server_accept(ServerSession& session, const UserAuthMsg& msg);

// ---- lost-card offline guessing attack -------------------------------------

struct GuessOutcome {
    bool found = false;
    std::string password;
    std::size_t guesses_tried = 0;
};

using ServerOracle = std::function<std::optional<ServerAuthMsg>(const LoginMsg&)>;

/// With a stolen card, performs ONE login exchange against the server, then
/// tests dictionary candidates offline against the received Auth_s. The
/// per-guess predicate needs no further network traffic.
GuessOutcome offline_guess(const Card& stolen, const PartyId& victim_id,
                           const PartyId& server_id, const G1Element& p_s,
                           const std::vector<std::string>& dictionary,
                           const ServerOracle& oracle, crypto::Rng& rng);

// ---- wire formats -----------------------------------------------------------

Bytes encode(const RegisterMsg& m);
Bytes encode(const CardIssueMsg& m);
Bytes encode(const LoginMsg& m);
Bytes encode(const ServerAuthMsg& m);
Bytes encode(const UserAuthMsg& m);
std::optional<RegisterMsg> decode_register(BytesView b);
std::optional<CardIssueMsg> decode_card_issue(BytesView b);
std::optional<LoginMsg> decode_login(BytesView b);
std::optional<ServerAuthMsg> decode_server_auth(BytesView b);
std::optional<UserAuthMsg> decode_user_auth(BytesView b);

Bytes card_bytes(const Card& card);
std::optional<Card> parse_card(BytesView b);

/// Full serialization of the long-term server state (used by tests to show it
/// stores no function of any password).
Bytes server_state_bytes(const ServerState& s);

inline constexpr std::uint8_t kTagRegister = 0x10;
inline constexpr std::uint8_t kTagCardIssue = 0x11;
inline constexpr std::uint8_t kTagLogin = 0x12;
inline constexpr std::uint8_t kTagServerAuth = 0x13;
inline constexpr std::uint8_t kTagUserAuth = 0x14;

}  // namespace smclab::juang
