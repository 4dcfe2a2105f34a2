#include "smclab/protocols/juang.hpp"

namespace smclab::juang {

using crypto::g1_base_mul;
using crypto::g1_bytes;
using crypto::g1_scale;
using crypto::g2_bytes;
using crypto::H;
using crypto::map_to_point;
using crypto::pairing;

namespace {

/// Ka = H(aP, P_s, Q, e(·,·)) — both sides reach the same pairing value,
/// the user via e(P_s, aQ), the server via e(aP, sQ).
Digest session_base_key(const G1Element& a_p, const G1Element& p_s, const G1Element& q,
                        const crypto::G2Element& paired) {
    return H(g1_bytes(a_p), g1_bytes(p_s), g1_bytes(q), g2_bytes(paired));
}

Bytes inner_record(const Digest& hpwb, const PartyId& user_id, const Digest& tag) {
    ByteWriter w;
    w.raw(hpwb).var(user_id).raw(tag);
    return w.take();
}

struct InnerRecord {
    Digest hpwb;
    PartyId user_id;
    Digest tag;
};

std::optional<InnerRecord> parse_inner(BytesView b) {
    ByteReader r(b);
    auto hpwb = r.raw(crypto::kDigestLen);
    auto id = r.var();
    auto tag = r.raw(crypto::kDigestLen);
    if (!hpwb || !id || !tag || !r.at_end()) return std::nullopt;
    return InnerRecord{*crypto::digest_from_bytes(*hpwb), to_string(BytesView(id->data(), id->size())),
                       *crypto::digest_from_bytes(*tag)};
}

}  // namespace

ServerState setup(const PartyId& server_id, crypto::Rng& rng) {
    ServerState st;
    st.s = rng.scalar();
    st.x = SymKey{rng.digest()};
    st.p_s = g1_base_mul(st.s);
    st.server_id = server_id;
    return st;
}

Digest password_commitment(std::string_view pw, const Digest& b) {
    return H(pw, b);
}

std::optional<Card> register_user(ServerState& server, const PartyId& user_id,
                                  const Digest& hpwb, const Digest& b, crypto::Rng& rng) {
    if (server.registered.contains(user_id)) return std::nullopt;
    server.registered.insert(user_id);
    Digest inner_tag = H(hpwb, user_id);
    Card card;
    card.b = b;
    card.sealed = crypto::sym_encrypt(server.x, inner_record(hpwb, user_id, inner_tag), rng);
    return card;
}

std::pair<LoginMsg, UserSession> login_start(const Card& card, std::string_view pw,
                                             const PartyId& user_id, const PartyId& server_id,
                                             const G1Element& p_s, crypto::Rng& rng) {
    UserSession sess;
    sess.a = rng.scalar();
    sess.a_p = g1_base_mul(sess.a);
    G1Element q = map_to_point(server_id);
    sess.ka = session_base_key(sess.a_p, p_s, q, pairing(p_s, g1_scale(q, sess.a)));
    sess.hpwb = password_commitment(pw, card.b);
    sess.user_id = user_id;
    sess.server_id = server_id;
    sess.phase = UserPhase::sent_login;

    LoginMsg msg;
    msg.a_p = sess.a_p;
    msg.alpha = crypto::sym_encrypt(SymKey{sess.ka}, crypto::sealed_box_bytes(card.sealed), rng);
    return {std::move(msg), std::move(sess)};
}

std::optional<std::pair<ServerAuthMsg, ServerSession>> server_respond(const ServerState& server,
                                                                      const LoginMsg& msg,
                                                                      crypto::Rng& rng) {
    G1Element q = map_to_point(server.server_id);
    Digest ka = session_base_key(msg.a_p, server.p_s, q, pairing(msg.a_p, g1_scale(q, server.s)));

    auto sealed_bytes = crypto::sym_decrypt(SymKey{ka}, msg.alpha);
    if (!sealed_bytes) return std::nullopt;
    auto sealed = crypto::parse_sealed_box(*sealed_bytes);
    if (!sealed) return std::nullopt;
    auto inner_bytes = crypto::sym_decrypt(server.x, *sealed);
    if (!inner_bytes) return std::nullopt;
    auto inner = parse_inner(*inner_bytes);
    if (!inner) return std::nullopt;
    if (inner->tag != H(inner->hpwb, inner->user_id)) return std::nullopt;
    if (!server.registered.contains(inner->user_id)) return std::nullopt;

    ServerSession sess;
    sess.ka = ka;
    sess.r = rng.digest();
    sess.sk = H(ka, sess.r, inner->user_id, server.server_id);
    sess.hpwb = inner->hpwb;
    sess.user_id = inner->user_id;
    sess.phase = ServerPhase::sent_auth;

    ServerAuthMsg out;
    out.auth_s = H(ka, inner->hpwb, sess.r, sess.sk);
    out.r = sess.r;
    return std::make_pair(out, std::move(sess));
}

std::optional<FinishResult> user_finish(UserSession& session, const Card& card,
                                        std::string_view pw, const ServerAuthMsg& msg) {
    if (session.phase != UserPhase::sent_login) return std::nullopt;
    Digest hpwb = password_commitment(pw, card.b);
    Digest sk = H(session.ka, msg.r, session.user_id, session.server_id);
    if (msg.auth_s != H(session.ka, hpwb, msg.r, sk)) {
        session.phase = UserPhase::rejected;
        return std::nullopt;
    }
    session.sk = sk;
    session.phase = UserPhase::done;
    FinishResult out;
    out.msg.auth_i = H(session.ka, hpwb, crypto::increment(msg.r), sk);
    out.sk = sk;
    return out;
}

bool server_accept(ServerSession& session, const UserAuthMsg& msg) {
    if (session.phase != ServerPhase::sent_auth) return false;
    Digest expected = H(session.ka, session.hpwb, crypto::increment(session.r), session.sk);
    session.phase = msg.auth_i == expected ? ServerPhase::accepted : ServerPhase::rejected;
    return session.phase == ServerPhase::accepted;
}

GuessOutcome offline_guess(const Card& stolen, const PartyId& victim_id,
                           const PartyId& server_id, const G1Element& p_s,
                           const std::vector<std::string>& dictionary,
                           const ServerOracle& oracle, crypto::Rng& rng) {
    // One real login using only card material; the password enters later,
    // offline, one dictionary candidate at a time.
    Scalar c = rng.scalar();
    G1Element c_p = g1_base_mul(c);
    G1Element q = map_to_point(server_id);
    Digest kc = session_base_key(c_p, p_s, q, pairing(p_s, g1_scale(q, c)));

    LoginMsg msg;
    msg.a_p = c_p;
    msg.alpha = crypto::sym_encrypt(SymKey{kc}, crypto::sealed_box_bytes(stolen.sealed), rng);

    auto reply = oracle(msg);
    GuessOutcome out;
    if (!reply) return out;

    Digest sk = H(kc, reply->r, victim_id, server_id);
    for (std::size_t i = 0; i < dictionary.size(); ++i) {
        Digest hpwb = password_commitment(dictionary[i], stolen.b);
        if (reply->auth_s == H(kc, hpwb, reply->r, sk)) {
            out.found = true;
            out.password = dictionary[i];
            out.guesses_tried = i + 1;
            return out;
        }
    }
    out.guesses_tried = dictionary.size();
    return out;
}

// ---- wire formats -----------------------------------------------------------

Bytes encode(const RegisterMsg& m) {
    ByteWriter w;
    w.u8(kTagRegister).var(m.user_id).raw(m.hpwb).raw(m.b);
    return w.take();
}

Bytes encode(const CardIssueMsg& m) {
    ByteWriter w;
    w.u8(kTagCardIssue).var(card_bytes(m.card));
    return w.take();
}

Bytes encode(const LoginMsg& m) {
    ByteWriter w;
    w.u8(kTagLogin).raw(g1_bytes(m.a_p)).var(crypto::sealed_box_bytes(m.alpha));
    return w.take();
}

Bytes encode(const ServerAuthMsg& m) {
    ByteWriter w;
    w.u8(kTagServerAuth).raw(m.auth_s).raw(m.r);
    return w.take();
}

Bytes encode(const UserAuthMsg& m) {
    ByteWriter w;
    w.u8(kTagUserAuth).raw(m.auth_i);
    return w.take();
}

std::optional<RegisterMsg> decode_register(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagRegister) return std::nullopt;
    auto id = r.var();
    auto hpwb = r.raw(crypto::kDigestLen);
    auto rnd = r.raw(crypto::kDigestLen);
    if (!id || !hpwb || !rnd || !r.at_end()) return std::nullopt;
    return RegisterMsg{to_string(BytesView(id->data(), id->size())),
                       *crypto::digest_from_bytes(*hpwb), *crypto::digest_from_bytes(*rnd)};
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
    auto ap = r.raw(crypto::kDigestLen);
    auto alpha = r.var();
    if (!ap || !alpha || !r.at_end()) return std::nullopt;
    auto box = crypto::parse_sealed_box(BytesView(alpha->data(), alpha->size()));
    if (!box) return std::nullopt;
    LoginMsg m;
    m.a_p = G1Element{Scalar::from_int(crypto::be_to_int(BytesView(ap->data(), ap->size())))};
    m.alpha = std::move(*box);
    return m;
}

std::optional<ServerAuthMsg> decode_server_auth(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagServerAuth) return std::nullopt;
    auto auth_s = r.raw(crypto::kDigestLen);
    auto rv = r.raw(crypto::kDigestLen);
    if (!auth_s || !rv || !r.at_end()) return std::nullopt;
    return ServerAuthMsg{*crypto::digest_from_bytes(*auth_s), *crypto::digest_from_bytes(*rv)};
}

std::optional<UserAuthMsg> decode_user_auth(BytesView b) {
    ByteReader r(b);
    auto tag = r.u8();
    if (!tag || *tag != kTagUserAuth) return std::nullopt;
    auto auth_i = r.raw(crypto::kDigestLen);
    if (!auth_i || !r.at_end()) return std::nullopt;
    return UserAuthMsg{*crypto::digest_from_bytes(*auth_i)};
}

Bytes card_bytes(const Card& card) {
    ByteWriter w;
    w.raw(card.b).var(crypto::sealed_box_bytes(card.sealed));
    return w.take();
}

std::optional<Card> parse_card(BytesView b) {
    ByteReader r(b);
    auto rnd = r.raw(crypto::kDigestLen);
    auto sealed = r.var();
    if (!rnd || !sealed || !r.at_end()) return std::nullopt;
    auto box = crypto::parse_sealed_box(BytesView(sealed->data(), sealed->size()));
    if (!box) return std::nullopt;
    return Card{*crypto::digest_from_bytes(*rnd), std::move(*box)};
}

Bytes server_state_bytes(const ServerState& s) {
    ByteWriter w;
    w.raw(crypto::scalar_bytes(s.s)).raw(s.x.key).raw(g1_bytes(s.p_s)).var(s.server_id);
    for (const auto& id : s.registered) w.var(id);
    return w.take();
}

}  // namespace smclab::juang
