#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"

// Hsiang-scheme card-local password handling. The card stores R, b, V with
//   R = P xor H(b xor PW)      V = H(P xor H(PW))
// where P is a server-derived secret that never sits on the card in the
// clear. Verification and password change are entirely offline, which is
// also why a stolen card falls to dictionary guessing without any network
// contact.

namespace smclab::hsiang {

using crypto::Digest;

struct Card {
    Digest r;
    Digest b;
    Digest v;
    bool operator==(const Card&) const = default;
};

/// Builds a card consistent with the verification equations for (P, PW).
Card card_init(const Digest& p, const Digest& b, std::string_view pw);

bool verify_password(const Card& card, std::string_view pw);

/// Re-derives P from the old password and rewrites both R and V for the new
/// one; nullopt (card untouched) when the old password fails.
std::optional<Card> change_password(const Card& card, std::string_view old_pw,
                                    std::string_view new_pw);

/// P = R xor H(b xor PW); exposes the card secret given the password.
Digest recover_secret(const Card& card, std::string_view pw);

struct GuessOutcome {
    bool found = false;
    std::string password;
    std::size_t guesses_tried = 0;
};

/// Dictionary sweep over the verification predicate; purely offline.
GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary);

Bytes card_bytes(const Card& card);  // three hex-encodable 32-byte fields
std::optional<Card> parse_card(BytesView b);

}  // namespace smclab::hsiang
