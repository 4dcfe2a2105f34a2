#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"
#include "smclab/simnet.hpp"

// Xu-scheme timestamped challenge-response. Registration sends the password
// to the server in the clear; the card stores B = H(ID)^x + H(PW) mod p. The
// server's login check recomputes B_s = W^x from the received W alone, so it
// never ties W's base to the claimed identity — which is what the insider
// impersonation exploits.

namespace smclab::xu {

using crypto::BigInt;
using crypto::Digest;
using crypto::ModGroupElement;
using crypto::Scalar;
using sim::Ticks;

struct ServerState {
    Scalar x;
    Ticks delta_t = 5;
    PartyId server_id;
    std::set<PartyId> registered;
};

struct Card {
    PartyId user_id;
    BigInt b;  // H(ID)^x + H(PW) mod p; not a subgroup element
};

struct RegisterMsg {
    PartyId user_id;
    std::string password;  // travels in the clear, by construction of the scheme
};

struct CardIssueMsg {
    Card card;
};

struct LoginMsg {
    PartyId user_id;
    Digest c_l;
    ModGroupElement w;
    Ticks t;
};

struct ServerMsg {
    PartyId user_id;
    Digest c_s;
    ModGroupElement m;
    Ticks t_s;
};

enum class Reject { unknown_id, stale_timestamp, bad_authenticator, wrong_identity };

std::string_view to_string(Reject r);

struct UserSession {
    PartyId user_id;
    Scalar v;
    ModGroupElement b_c;  // H(ID)^{xv}
    ModGroupElement w;    // H(ID)^v
    Ticks delta_t = 5;
    std::optional<Digest> sk;
};

struct ServerSession {
    PartyId claimed_id;
    Scalar m;
    ModGroupElement m_elem;
    ModGroupElement w;
    Digest sk;
    bool accepted = false;
};

/// nullopt when the id is already registered.
std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  std::string_view pw);

std::pair<LoginMsg, UserSession> login(const Card& card, std::string_view pw, Ticks now,
                                       Ticks delta_t, crypto::Rng& rng);

std::variant<std::pair<ServerMsg, ServerSession>, Reject> authenticate(const ServerState& server,
                                                                       const LoginMsg& msg,
                                                                       Ticks now,
                                                                       crypto::Rng& rng);

std::variant<Digest, Reject> user_finish(UserSession& session, const ServerMsg& msg, Ticks now);

// ---- insider impersonation ----------------------------------------------------

struct ImpersonationResult {
    bool accepted = false;
    std::optional<Digest> attacker_sk;
    std::optional<Reject> reject_reason;
};

using ServerOracle = std::function<std::variant<ServerMsg, Reject>(const LoginMsg&)>;

/// A registered insider strips H(own_PW) from their own card to get
/// H(ID_u)^x, then logs in under `target_id` with W based on their own
/// identity. The server's W^x check passes regardless of the claimed id.
/// For the session key the insider re-bases the server's reply element onto
/// its own W — the hash-to-group exponents are public in this algebra, so
/// the re-basing exponent is computable and the result equals the server's
/// W^m slot.
ImpersonationResult insider_attack(const Card& own_card, std::string_view own_pw,
                                   const PartyId& target_id, const ServerOracle& oracle,
                                   Ticks now, crypto::Rng& rng);

// ---- wire formats ---------------------------------------------------------------

Bytes encode(const RegisterMsg& m);
Bytes encode(const CardIssueMsg& m);
Bytes encode(const LoginMsg& m);
Bytes encode(const ServerMsg& m);
std::optional<RegisterMsg> decode_register(BytesView b);
std::optional<CardIssueMsg> decode_card_issue(BytesView b);
std::optional<LoginMsg> decode_login(BytesView b);
std::optional<ServerMsg> decode_server(BytesView b);

Bytes card_bytes(const Card& card);
std::optional<Card> parse_card(BytesView b);

inline constexpr std::uint8_t kTagRegister = 0x30;
inline constexpr std::uint8_t kTagCardIssue = 0x31;
inline constexpr std::uint8_t kTagLogin = 0x32;
inline constexpr std::uint8_t kTagServer = 0x33;

}  // namespace smclab::xu
