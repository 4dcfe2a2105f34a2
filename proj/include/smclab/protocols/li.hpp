#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"

// Li-scheme biometrics-assisted mutual authentication from XOR and hash.
// The card stores ID, f_c = H(biometric), e_c = H(ID, x) xor H(PW, f_c).
// The server answers any well-formed first message for a valid ID with
// {M5, M6 = H(M2, M2 xor H(ID, x))} — that unauthenticated first response is
// exactly what the single-login-request guessing attack consumes. The scheme
// defines no session key.

namespace smclab::li {

using crypto::Digest;

struct ServerState {
    Digest x;
    std::set<PartyId> registered;
};

struct Card {
    PartyId user_id;
    Digest f_c;
    Digest e_c;
};

struct RegisterMsg {
    PartyId user_id;
    std::string password;
    std::string biometric;
};

struct CardIssueMsg {
    Card card;
};

struct LoginMsg {
    PartyId user_id;
    Digest m2;
};

struct ChallengeMsg {
    Digest m5;
    Digest m6;
};

struct ResponseMsg {
    Digest m8;
};

enum class UserPhase { sent_login, done, rejected };
enum class ServerPhase { sent_challenge, accepted, rejected };

struct UserSession {
    Digest r_c;
    Digest m1;
    Digest m2;
    UserPhase phase = UserPhase::sent_login;
};

struct ServerSession {
    Digest r_s;
    Digest m5;
    Digest m2;
    ServerPhase phase = ServerPhase::sent_challenge;
};

std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  std::string_view pw, std::string_view biometric);

/// Checks the biometric against f_c before anything is sent; nullopt means
/// the login aborted locally with no message produced.
std::optional<std::pair<LoginMsg, UserSession>> login_start(const Card& card,
                                                            std::string_view pw,
                                                            std::string_view biometric,
                                                            crypto::Rng& rng);

/// nullopt only on unknown id — any well-formed M2 gets an answer.
std::optional<std::pair<ChallengeMsg, ServerSession>> server_respond(const ServerState& server,
                                                                     const LoginMsg& msg,
                                                                     crypto::Rng& rng);

/// Authenticates the server via M6, then answers M8.
std::optional<ResponseMsg> user_finish(UserSession& session, const ChallengeMsg& msg);

bool server_accept(ServerSession& session, const ResponseMsg& msg);

// ---- single-login-request offline guessing attack ---------------------------

struct GuessOutcome {
    bool found = false;
    std::string password;
    std::size_t guesses_tried = 0;
    std::size_t login_requests_sent = 0;
};

using ServerOracle = std::function<std::optional<ChallengeMsg>(const LoginMsg&)>;

/// Sends a single {ID, random M_e} login request, keeps the server's
/// {M5, M6}, hangs up, and tests dictionary candidates offline against M6.
GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary,
                           const ServerOracle& oracle, crypto::Rng& rng);

// ---- wire formats -------------------------------------------------------------

Bytes encode(const RegisterMsg& m);
Bytes encode(const CardIssueMsg& m);
Bytes encode(const LoginMsg& m);
Bytes encode(const ChallengeMsg& m);
Bytes encode(const ResponseMsg& m);
std::optional<RegisterMsg> decode_register(BytesView b);
std::optional<CardIssueMsg> decode_card_issue(BytesView b);
std::optional<LoginMsg> decode_login(BytesView b);
std::optional<ChallengeMsg> decode_challenge(BytesView b);
std::optional<ResponseMsg> decode_response(BytesView b);

Bytes card_bytes(const Card& card);
std::optional<Card> parse_card(BytesView b);

inline constexpr std::uint8_t kTagRegister = 0x40;
inline constexpr std::uint8_t kTagCardIssue = 0x41;
inline constexpr std::uint8_t kTagLogin = 0x42;
inline constexpr std::uint8_t kTagChallenge = 0x43;
inline constexpr std::uint8_t kTagResponse = 0x44;

}  // namespace smclab::li
