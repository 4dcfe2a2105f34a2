#include "smclab/protocols/kim.hpp"

namespace smclab::kim {

using crypto::H;
using crypto::pad_to_digest;
using crypto::xor_digests;

namespace {
Digest pw_chain(const Digest& pwd) {
    return H(xor_digests(pwd, H(pwd)));  // H(PW xor H(PW))
}
}  // namespace

Card card_init(const PartyId& id, const Digest& x, const Digest& n, std::string_view pw) {
    Digest idd = pad_to_digest(id);
    Digest pwd = pad_to_digest(pw);
    Card card;
    card.k1 = xor_digests(H(xor_digests(idd, x)), n);
    card.r = xor_digests(card.k1, H(pwd));
    card.k2 = xor_digests(H(xor_digests(xor_digests(idd, x), n)), pw_chain(pwd));
    return card;
}

bool verify_password(const Card& card, std::string_view pw) {
    if (pw.size() > crypto::kDigestLen) return false;  // cannot be a registered password
    return xor_digests(card.r, H(pad_to_digest(pw))) == card.k1;
}

std::optional<Card> change_password(const Card& card, std::string_view old_pw,
                                    std::string_view new_pw) {
    if (!verify_password(card, old_pw)) return std::nullopt;
    Digest old_pwd = pad_to_digest(old_pw);
    Digest new_pwd = pad_to_digest(new_pw);
    Card out = card;
    out.r = xor_digests(card.k1, H(new_pwd));
    out.k2 = xor_digests(xor_digests(card.k2, pw_chain(old_pwd)), pw_chain(new_pwd));
    return out;
}

GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary) {
    GuessOutcome out;
    for (std::size_t i = 0; i < dictionary.size(); ++i) {
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
    w.raw(card.r).raw(card.k1).raw(card.k2);
    return w.take();
}

std::optional<Card> parse_card(BytesView b) {
    ByteReader rd(b);
    auto r = rd.raw(crypto::kDigestLen);
    auto k1 = rd.raw(crypto::kDigestLen);
    auto k2 = rd.raw(crypto::kDigestLen);
    if (!r || !k1 || !k2 || !rd.at_end()) return std::nullopt;
    return Card{*crypto::digest_from_bytes(*r), *crypto::digest_from_bytes(*k1),
                *crypto::digest_from_bytes(*k2)};
}

}  // namespace smclab::kim
