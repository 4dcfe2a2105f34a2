#include "smclab/protocols/hsiang.hpp"

namespace smclab::hsiang {

using crypto::H;
using crypto::pad_to_digest;
using crypto::xor_digests;

Card card_init(const Digest& p, const Digest& b, std::string_view pw) {
    Digest pwd = pad_to_digest(pw);
    Card card;
    card.b = b;
    card.r = xor_digests(p, H(xor_digests(b, pwd)));
    card.v = H(xor_digests(p, H(pwd)));
    return card;
}

bool verify_password(const Card& card, std::string_view pw) {
    if (pw.size() > crypto::kDigestLen) return false;  // cannot be a registered password
    Digest pwd = pad_to_digest(pw);
    Digest p_star = xor_digests(card.r, H(xor_digests(card.b, pwd)));
    return H(xor_digests(p_star, H(pwd))) == card.v;
}

std::optional<Card> change_password(const Card& card, std::string_view old_pw,
                                    std::string_view new_pw) {
    if (!verify_password(card, old_pw)) return std::nullopt;
    Digest p_star = recover_secret(card, old_pw);
    return card_init(p_star, card.b, new_pw);
}

Digest recover_secret(const Card& card, std::string_view pw) {
    return xor_digests(card.r, H(xor_digests(card.b, pad_to_digest(pw))));
}

GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary) {
    GuessOutcome out;
    for (std::size_t i = 0; i < dictionary.size(); ++i) {
        // Same predicate the card itself applies at verification.
        if (verify_password(stolen, dictionary[i])) {
            out.found = true;
            out.password = dictionary[i];
            out.guesses_tried = i + 1;
            return out;
        }
    }
    out.guesses_tried = dictionary.size();
    return out;
}

Bytes card_bytes(const Card& card) {
    ByteWriter w;
    w.raw(card.r).raw(card.b).raw(card.v);
    return w.take();
}

std::optional<Card> parse_card(BytesView b) {
    ByteReader rd(b);
    auto r = rd.raw(crypto::kDigestLen);
    auto rb = rd.raw(crypto::kDigestLen);
    auto v = rd.raw(crypto::kDigestLen);
    if (!r || !rb || !v || !rd.at_end()) return std::nullopt;
    return Card{*crypto::digest_from_bytes(*r), *crypto::digest_from_bytes(*rb),
                *crypto::digest_from_bytes(*v)};
}

}  // namespace smclab::hsiang
