#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"

// Kim-scheme card-local password handling. The card stores
//   K1 = H(ID xor x) xor N
//   R  = K1 xor H(PW)
//   K2 = H(ID xor x xor N) xor H(PW xor H(PW))
// (x server secret, N random, everything padded to digest width). R xor K1
// equals H(PW) outright, which is what the one-hash-per-guess attack tests.

namespace smclab::kim {

using crypto::Digest;

struct Card {
    Digest r;
    Digest k1;
    Digest k2;
    bool operator==(const Card&) const = default;
};

Card card_init(const PartyId& id, const Digest& x, const Digest& n, std::string_view pw);

bool verify_password(const Card& card, std::string_view pw);

/// Rewrites R and K2 for the new password; K1 stays. nullopt when the old
/// password fails.
std::optional<Card> change_password(const Card& card, std::string_view old_pw,
                                    std::string_view new_pw);

struct GuessOutcome {
    bool found = false;
    std::string password;
    std::size_t guesses_tried = 0;
};

/// Offline dictionary sweep; one hash evaluation per candidate.
GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary);

Bytes card_bytes(const Card& card);
std::optional<Card> parse_card(BytesView b);

}  // namespace smclab::kim
