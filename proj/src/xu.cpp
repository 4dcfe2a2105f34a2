#include "smclab/protocols/xu.hpp"

namespace smclab::xu {

using crypto::add_mod_p;
using crypto::digest_to_int;
using crypto::H;
using crypto::mod_bytes;
using crypto::mod_hash_exponent;
using crypto::mod_hash_to_group;
using crypto::mod_pow;
using crypto::sub_mod_p;

std::string_view to_string(Reject r) {
    switch (r) {
        case Reject::unknown_id: return "unknown_id";
        case Reject::stale_timestamp: return "stale_timestamp";
        case Reject::bad_authenticator: return "bad_authenticator";
        case Reject::wrong_identity: return "wrong_identity";
    }
    return "?";
}

namespace {

Digest login_authenticator(Ticks t, const ModGroupElement& b, const ModGroupElement& w,
                           const PartyId& id) {
    return H(be64(t), mod_bytes(b), mod_bytes(w), id);
}

Digest server_authenticator(const ModGroupElement& m, const ModGroupElement& b, Ticks t_s,
                            const PartyId& id) {
    return H(mod_bytes(m), mod_bytes(b), be64(t_s), id);
}

Digest session_key(const PartyId& id, const ModGroupElement& m, const ModGroupElement& w,
                   const ModGroupElement& shared) {
    return H(id, mod_bytes(m), mod_bytes(w), mod_bytes(shared));
}

}  // namespace

std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  std::string_view pw) {
    if (server.registered.contains(user_id)) return std::nullopt;
    server.registered.insert(user_id);
    ModGroupElement base = mod_pow(mod_hash_to_group(user_id), server.x);
    Card card;
    card.user_id = user_id;
    card.b = add_mod_p(base.value, digest_to_int(H(pw)));
    return card;
}

std::pair<LoginMsg, UserSession> login(const Card& card, std::string_view pw, Ticks now,
                                       Ticks delta_t, crypto::Rng& rng) {
    UserSession sess;
    sess.user_id = card.user_id;
    sess.v = rng.scalar();
    sess.delta_t = delta_t;
    ModGroupElement stripped{sub_mod_p(card.b, digest_to_int(H(pw)))};
    sess.b_c = mod_pow(stripped, sess.v);
    sess.w = mod_pow(mod_hash_to_group(card.user_id), sess.v);

    LoginMsg msg;
    msg.user_id = card.user_id;
    msg.w = sess.w;
    msg.t = now;
    msg.c_l = login_authenticator(now, sess.b_c, sess.w, card.user_id);
    return {std::move(msg), std::move(sess)};
}

std::variant<std::pair<ServerMsg, ServerSession>, Reject> authenticate(const ServerState& server,
                                                                       const LoginMsg& msg,
                                                                       Ticks now,
                                                                       crypto::Rng& rng) {
    if (!server.registered.contains(msg.user_id)) return Reject::unknown_id;
    if (now < msg.t || now - msg.t >= server.delta_t) return Reject::stale_timestamp;
    ModGroupElement b_s = mod_pow(msg.w, server.x);
    if (msg.c_l != login_authenticator(msg.t, b_s, msg.w, msg.user_id)) {
        return Reject::bad_authenticator;
    }

    ServerSession sess;
    sess.claimed_id = msg.user_id;
    sess.m = rng.scalar();
    sess.m_elem = mod_pow(mod_hash_to_group(msg.user_id), sess.m);
    sess.w = msg.w;
    sess.sk = session_key(msg.user_id, sess.m_elem, msg.w, mod_pow(msg.w, sess.m));
    sess.accepted = true;

    ServerMsg out;
    out.user_id = msg.user_id;
    out.m = sess.m_elem;
    out.t_s = now;
    out.c_s = server_authenticator(sess.m_elem, b_s, now, msg.user_id);
    return std::make_pair(out, std::move(sess));
}

std::variant<Digest, Reject> user_finish(UserSession& session, const ServerMsg& msg, Ticks now) {
    if (msg.user_id != session.user_id) return Reject::wrong_identity;
    if (now < msg.t_s || now - msg.t_s >= session.delta_t) return Reject::stale_timestamp;
    if (msg.c_s != server_authenticator(msg.m, session.b_c, msg.t_s, session.user_id)) {
        return Reject::bad_authenticator;
    }
    Digest sk = session_key(session.user_id, msg.m, session.w, mod_pow(msg.m, session.v));
    session.sk = sk;
    return sk;
}

ImpersonationResult insider_attack(const Card& own_card, std::string_view own_pw,
                                   const PartyId& target_id, const ServerOracle& oracle,
                                   Ticks now, crypto::Rng& rng) {
    ImpersonationResult out;

    // H(ID_u)^x, recovered from the insider's own card.
    ModGroupElement d{sub_mod_p(own_card.b, digest_to_int(H(own_pw)))};
    Scalar r = rng.scalar();
    ModGroupElement w = mod_pow(mod_hash_to_group(own_card.user_id), r);
    ModGroupElement b_u = mod_pow(d, r);

    LoginMsg msg;
    msg.user_id = target_id;
    msg.w = w;
    msg.t = now;
    msg.c_l = login_authenticator(now, b_u, w, target_id);

    auto reply = oracle(msg);
    if (std::holds_alternative<Reject>(reply)) {
        out.reject_reason = std::get<Reject>(reply);
        return out;
    }
    const ServerMsg& sm = std::get<ServerMsg>(reply);

    // The server replied with M = H(target)^m but keyed on W^m = H(ID_u)^{rm}.
    // Both hash-to-group exponents are public, so raising M to
    // r * e_u / e_target re-bases it onto W and reproduces W^m.
    Scalar e_u = mod_hash_exponent(std::string_view(own_card.user_id));
    Scalar e_t = mod_hash_exponent(std::string_view(target_id));
    ModGroupElement shared = mod_pow(sm.m, r * e_u * e_t.inverse());

    out.accepted = true;
    out.attacker_sk = session_key(target_id, sm.m, w, shared);
    return out;
}

// ---- wire formats ---------------------------------------------------------------

Bytes encode(const RegisterMsg& m) {
    ByteWriter w;
    w.u8(kTagRegister).var(m.user_id).var(m.password);
    return w.take();
}

Bytes encode(const CardIssueMsg& m) {
    ByteWriter w;
    w.u8(kTagCardIssue).var(card_bytes(m.card));
    return w.take();
}

Bytes encode(const LoginMsg& m) {
    ByteWriter w;
    w.u8(kTagLogin).var(m.user_id).raw(m.c_l).raw(mod_bytes(m.w)).u64(m.t);
    return w.take();
}

Bytes encode(const ServerMsg& m) {
    ByteWriter w;
    w.u8(kTagServer).var(m.user_id).raw(m.c_s).raw(mod_bytes(m.m)).u64(m.t_s);
    return w.take();
}

std::optional<RegisterMsg> decode_register(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagRegister) return std::nullopt;
    auto id = r.var();
    auto pw = r.var();
    if (!id || !pw || !r.at_end()) return std::nullopt;
    return RegisterMsg{to_string(BytesView(id->data(), id->size())),
                       to_string(BytesView(pw->data(), pw->size()))};
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
    auto c_l = r.raw(crypto::kDigestLen);
    auto w = r.raw(32);
    auto t = r.u64();
    if (!id || !c_l || !w || !t || !r.at_end()) return std::nullopt;
    LoginMsg m;
    m.user_id = to_string(BytesView(id->data(), id->size()));
    m.c_l = *crypto::digest_from_bytes(*c_l);
    m.w = ModGroupElement{crypto::be_to_int(BytesView(w->data(), w->size()))};
    m.t = *t;
    return m;
}

std::optional<ServerMsg> decode_server(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagServer) return std::nullopt;
    auto id = r.var();
    auto c_s = r.raw(crypto::kDigestLen);
    auto m_raw = r.raw(32);
    auto t_s = r.u64();
    if (!id || !c_s || !m_raw || !t_s || !r.at_end()) return std::nullopt;
    ServerMsg m;
    m.user_id = to_string(BytesView(id->data(), id->size()));
    m.c_s = *crypto::digest_from_bytes(*c_s);
    m.m = ModGroupElement{crypto::be_to_int(BytesView(m_raw->data(), m_raw->size()))};
    m.t_s = *t_s;
    return m;
}

Bytes card_bytes(const Card& card) {
    ByteWriter w;
    w.var(card.user_id).raw(crypto::int_be32(card.b));
    return w.take();
}

std::optional<Card> parse_card(BytesView b) {
    ByteReader r(b);
    auto id = r.var();
    auto bv = r.raw(32);
    if (!id || !bv || !r.at_end()) return std::nullopt;
    return Card{to_string(BytesView(id->data(), id->size())),
                crypto::be_to_int(BytesView(bv->data(), bv->size()))};
}

}  // namespace smclab::xu
