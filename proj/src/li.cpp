#include "smclab/protocols/li.hpp"

namespace smclab::li {

using crypto::H;
using crypto::pad_to_digest;
using crypto::xor_digests;

namespace {
Digest identity_key(const PartyId& id, const Digest& x) {
    return H(pad_to_digest(id), x);  // H(ID, x)
}

Digest password_key(std::string_view pw, const Digest& f_c) {
    return H(pad_to_digest(pw), f_c);  // H(PW, f_c)
}
}  // namespace

std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  std::string_view pw, std::string_view biometric) {
    if (server.registered.contains(user_id) || biometric.empty()) return std::nullopt;
    server.registered.insert(user_id);
    Card card;
    card.user_id = user_id;
    card.f_c = H(biometric);
    card.e_c = xor_digests(identity_key(user_id, server.x), password_key(pw, card.f_c));
    return card;
}

std::optional<std::pair<LoginMsg, UserSession>> login_start(const Card& card,
                                                            std::string_view pw,
                                                            std::string_view biometric,
                                                            crypto::Rng& rng) {
    if (H(biometric) != card.f_c) return std::nullopt;
    UserSession sess;
    sess.r_c = rng.digest();
    sess.m1 = xor_digests(card.e_c, password_key(pw, card.f_c));
    sess.m2 = xor_digests(sess.m1, sess.r_c);
    sess.phase = UserPhase::sent_login;
    return std::make_pair(LoginMsg{card.user_id, sess.m2}, std::move(sess));
}

std::optional<std::pair<ChallengeMsg, ServerSession>> server_respond(const ServerState& server,
                                                                     const LoginMsg& msg,
                                                                     crypto::Rng& rng) {
    if (!server.registered.contains(msg.user_id)) return std::nullopt;
    Digest m3 = identity_key(msg.user_id, server.x);
    Digest m4 = xor_digests(msg.m2, m3);  // the user's R_c when M2 was honest
    ServerSession sess;
    sess.r_s = rng.digest();
    sess.m5 = xor_digests(m3, sess.r_s);
    sess.m2 = msg.m2;
    sess.phase = ServerPhase::sent_challenge;
    ChallengeMsg out{sess.m5, H(msg.m2, m4)};
    return std::make_pair(out, std::move(sess));
}

std::optional<ResponseMsg> user_finish(UserSession& session, const ChallengeMsg& msg) {
    if (session.phase != UserPhase::sent_login) return std::nullopt;
    if (msg.m6 != H(session.m2, session.r_c)) {
        session.phase = UserPhase::rejected;
        return std::nullopt;
    }
    Digest m7 = xor_digests(msg.m5, session.m1);  // == R_s
    session.phase = UserPhase::done;
    return ResponseMsg{H(msg.m5, m7)};
}

bool server_accept(ServerSession& session, const ResponseMsg& msg) {
    if (session.phase != ServerPhase::sent_challenge) return false;
    session.phase = msg.m8 == H(session.m5, session.r_s) ? ServerPhase::accepted
                                                         : ServerPhase::rejected;
    return session.phase == ServerPhase::accepted;
}

GuessOutcome offline_guess(const Card& stolen, const std::vector<std::string>& dictionary,
                           const ServerOracle& oracle, crypto::Rng& rng) {
    GuessOutcome out;
    Digest m_e = rng.digest();
    auto reply = oracle(LoginMsg{stolen.user_id, m_e});
    out.login_requests_sent = 1;
    if (!reply) return out;
    // Communication ends here; every candidate below is tested offline.
    for (std::size_t i = 0; i < dictionary.size(); ++i) {
        if (dictionary[i].size() > crypto::kDigestLen) continue;  // cannot be registered
        Digest m4 = xor_digests(xor_digests(m_e, stolen.e_c), password_key(dictionary[i], stolen.f_c));
        if (H(m_e, m4) == reply->m6) {
            out.found = true;
            out.password = dictionary[i];
            out.guesses_tried = i + 1;
            return out;
        }
    }
    out.guesses_tried = dictionary.size();
    return out;
}

// ---- wire formats -------------------------------------------------------------

Bytes encode(const RegisterMsg& m) {
    ByteWriter w;
    w.u8(kTagRegister).var(m.user_id).var(m.password).var(m.biometric);
    return w.take();
}

Bytes encode(const CardIssueMsg& m) {
    ByteWriter w;
    w.u8(kTagCardIssue).var(card_bytes(m.card));
    return w.take();
}

Bytes encode(const LoginMsg& m) {
    ByteWriter w;
    w.u8(kTagLogin).var(m.user_id).raw(m.m2);
    return w.take();
}

Bytes encode(const ChallengeMsg& m) {
    ByteWriter w;
    w.u8(kTagChallenge).raw(m.m5).raw(m.m6);
    return w.take();
}

Bytes encode(const ResponseMsg& m) {
    ByteWriter w;
    w.u8(kTagResponse).raw(m.m8);
    return w.take();
}

std::optional<RegisterMsg> decode_register(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagRegister) return std::nullopt;
    auto id = r.var();
    auto pw = r.var();
    auto bio = r.var();
    if (!id || !pw || !bio || !r.at_end()) return std::nullopt;
    return RegisterMsg{to_string(BytesView(id->data(), id->size())),
                       to_string(BytesView(pw->data(), pw->size())),
                       to_string(BytesView(bio->data(), bio->size()))};
}

std::optional<CardIssueMsg> decode_card_issue(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagCardIssue) return std::nullopt;
    auto card = r.var();
    if (!card || !r.at_end()) return std::nullopt;
    auto parsed = parse_card(BytesView(card->data(), card->size()));
    if (!parsed) return std::nullopt;
    return CardIssueMsg{*parsed};
}

std::optional<LoginMsg> decode_login(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagLogin) return std::nullopt;
    auto id = r.var();
    auto m2 = r.raw(crypto::kDigestLen);
    if (!id || !m2 || !r.at_end()) return std::nullopt;
    return LoginMsg{to_string(BytesView(id->data(), id->size())),
                    *crypto::digest_from_bytes(*m2)};
}

std::optional<ChallengeMsg> decode_challenge(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagChallenge) return std::nullopt;
    auto m5 = r.raw(crypto::kDigestLen);
    auto m6 = r.raw(crypto::kDigestLen);
    if (!m5 || !m6 || !r.at_end()) return std::nullopt;
    return ChallengeMsg{*crypto::digest_from_bytes(*m5), *crypto::digest_from_bytes(*m6)};
}

std::optional<ResponseMsg> decode_response(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagResponse) return std::nullopt;
    auto m8 = r.raw(crypto::kDigestLen);
    if (!m8 || !r.at_end()) return std::nullopt;
    return ResponseMsg{*crypto::digest_from_bytes(*m8)};
}

Bytes card_bytes(const Card& card) {
    ByteWriter w;
    w.var(card.user_id).raw(card.f_c).raw(card.e_c);
    return w.take();
}

std::optional<Card> parse_card(BytesView b) {
    ByteReader r(b);
    auto id = r.var();
    auto f_c = r.raw(crypto::kDigestLen);
    auto e_c = r.raw(crypto::kDigestLen);
    if (!id || !f_c || !e_c || !r.at_end()) return std::nullopt;
    return Card{to_string(BytesView(id->data(), id->size())), *crypto::digest_from_bytes(*f_c),
                *crypto::digest_from_bytes(*e_c)};
}

}  // namespace smclab::li
