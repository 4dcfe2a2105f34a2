#include "smclab/crypto.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace smclab::crypto {

namespace {

thread_local std::uint64_t t_hash_invocations = 0;

Digest sha256(BytesView data) {
    ++t_hash_invocations;
    Digest out;
    unsigned int len = 0;
    static const std::uint8_t empty = 0;
    const std::uint8_t* ptr = data.empty() ? &empty : data.data();
    if (EVP_Digest(ptr, data.size(), out.bytes.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != kDigestLen) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

BigInt parse_big(const char* hex) {
    return BigInt(hex);
}

}  // namespace

const BigInt& group_q() {
    // 2^255 - 18057; both q and 2q + 1 are prime.
    static const BigInt q =
        parse_big("0x7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffb977");
    return q;
}

const BigInt& group_p() {
    static const BigInt p =
        parse_big("0xffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff72ef");
    return p;
}

const BigInt& group_g() {
    static const BigInt g = 4;  // quadratic residue, hence order q under p = 2q + 1
    return g;
}

std::string to_hex(const Digest& d) {
    return smclab::to_hex(BytesView(d.bytes.data(), d.bytes.size()));
}

std::optional<Digest> digest_from_hex(std::string_view hex) {
    auto raw = from_hex(hex);
    if (!raw) return std::nullopt;
    return digest_from_bytes(*raw);
}

std::optional<Digest> digest_from_bytes(BytesView b) {
    if (b.size() != kDigestLen) return std::nullopt;
    Digest d;
    std::copy(b.begin(), b.end(), d.bytes.begin());
    return d;
}

namespace {
Digest hash_framed(BytesView* parts, std::size_t count) {
    if (count == 0) throw std::invalid_argument("hash_parts: empty part list");
    Bytes framed;
    std::size_t total = 0;
    for (std::size_t i = 0; i < count; ++i) total += 8 + parts[i].size();
    framed.reserve(total);
    for (std::size_t i = 0; i < count; ++i) {
        Bytes len = be64(parts[i].size());
        framed.insert(framed.end(), len.begin(), len.end());
        framed.insert(framed.end(), parts[i].begin(), parts[i].end());
    }
    return sha256(framed);
}
}  // namespace

Digest hash_parts(std::initializer_list<BytesView> parts) {
    std::vector<BytesView> v(parts);
    return hash_framed(v.data(), v.size());
}

Digest hash_parts(std::span<const Bytes> parts) {
    std::vector<BytesView> v;
    v.reserve(parts.size());
    for (const Bytes& p : parts) v.emplace_back(p.data(), p.size());
    return hash_framed(v.data(), v.size());
}

std::uint64_t hash_invocations() {
    return t_hash_invocations;
}

Digest xor_digests(const Digest& a, const Digest& b) {
    Digest out;
    for (std::size_t i = 0; i < kDigestLen; ++i) out.bytes[i] = a.bytes[i] ^ b.bytes[i];
    return out;
}

Digest pad_to_digest(BytesView s) {
    if (s.size() > kDigestLen) {
        throw std::invalid_argument("pad_to_digest: input longer than digest width");
    }
    Digest out;
    std::copy(s.begin(), s.end(), out.bytes.begin());
    return out;
}

Digest pad_to_digest(std::string_view s) {
    return pad_to_digest(detail::as_view(s));
}

Digest increment(const Digest& d) {
    Digest out = d;
    for (std::size_t i = kDigestLen; i-- > 0;) {
        if (++out.bytes[i] != 0) break;
    }
    return out;
}

// ---- scalars --------------------------------------------------------------

Scalar Scalar::from_u64(std::uint64_t v) {
    return from_int(BigInt(v));
}

Scalar Scalar::from_int(BigInt v) {
    Scalar s;
    v %= group_q();
    if (v < 0) v += group_q();
    s.v_ = std::move(v);
    return s;
}

Scalar Scalar::from_digest(const Digest& d) {
    return from_int(be_to_int(d));
}

Scalar Scalar::inverse() const {
    if (v_ == 0) throw std::invalid_argument("Scalar::inverse: zero");
    Scalar s;
    s.v_ = boost::multiprecision::powm(v_, group_q() - 2, group_q());
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar::from_int(a.v_ + b.v_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar::from_int(a.v_ * b.v_);
}

Bytes scalar_bytes(const Scalar& s) {
    return int_be32(s.value());
}

// ---- pairing groups --------------------------------------------------------

G1Element g1_base_mul(const Scalar& s) {
    return {s};
}

G1Element g1_add(const G1Element& a, const G1Element& b) {
    return {a.exponent + b.exponent};
}

G1Element g1_scale(const G1Element& x, const Scalar& s) {
    return {x.exponent * s};
}

G2Element g2_mul(const G2Element& a, const G2Element& b) {
    return {a.exponent + b.exponent};
}

G2Element g2_pow(const G2Element& x, const Scalar& s) {
    return {x.exponent * s};
}

G2Element pairing(const G1Element& x, const G1Element& y) {
    return {x.exponent * y.exponent};
}

G1Element map_to_point(BytesView id) {
    Scalar e = Scalar::from_digest(H("map2point", id));
    if (e.is_zero()) e = Scalar::from_u64(1);  // keep clear of the identity
    return {e};
}

G1Element map_to_point(std::string_view id) {
    return map_to_point(detail::as_view(id));
}

Bytes g1_bytes(const G1Element& x) {
    return scalar_bytes(x.exponent);
}

Bytes g2_bytes(const G2Element& x) {
    return scalar_bytes(x.exponent);
}

// ---- multiplicative group ---------------------------------------------------

Scalar mod_hash_exponent(BytesView id) {
    return Scalar::from_digest(H("mod2group", id));
}

Scalar mod_hash_exponent(std::string_view id) {
    return mod_hash_exponent(detail::as_view(id));
}

ModGroupElement mod_hash_to_group(BytesView id) {
    return mod_g_pow(mod_hash_exponent(id));
}

ModGroupElement mod_hash_to_group(std::string_view id) {
    return mod_hash_to_group(detail::as_view(id));
}

ModGroupElement mod_g_pow(const Scalar& s) {
    return {boost::multiprecision::powm(group_g(), s.value(), group_p())};
}

ModGroupElement mod_pow(const ModGroupElement& x, const Scalar& s) {
    return {boost::multiprecision::powm(x.value, s.value(), group_p())};
}

BigInt digest_to_int(const Digest& d) {
    return be_to_int(d);
}

BigInt add_mod_p(const BigInt& a, const BigInt& b) {
    return (a + b) % group_p();
}

BigInt sub_mod_p(const BigInt& a, const BigInt& b) {
    BigInt r = (a - b) % group_p();
    if (r < 0) r += group_p();
    return r;
}

Bytes int_be32(const BigInt& v) {
    if (v < 0) throw std::invalid_argument("int_be32: negative");
    Bytes raw;
    if (v != 0) boost::multiprecision::export_bits(v, std::back_inserter(raw), 8);
    if (raw.size() > 32) throw std::invalid_argument("int_be32: value wider than 256 bits");
    Bytes out(32, 0);
    std::copy(raw.begin(), raw.end(), out.begin() + static_cast<std::ptrdiff_t>(32 - raw.size()));
    return out;
}

BigInt be_to_int(BytesView b) {
    BigInt v = 0;
    for (std::uint8_t c : b) v = (v << 8) | c;
    return v;
}

Bytes mod_bytes(const ModGroupElement& x) {
    return int_be32(x.value);
}

// ---- rng --------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) {
    state_ = H("rng-seed", be64(seed));
}

Rng Rng::fork(std::string_view label) const {
    Rng out;
    out.state_ = H("rng-fork", state_, label);
    return out;
}

Bytes Rng::bytes(std::size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        Digest block = H("rng-block", state_, be64(counter_++));
        std::size_t take = std::min(kDigestLen, n - out.size());
        out.insert(out.end(), block.bytes.begin(),
                   block.bytes.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

Digest Rng::digest() {
    return H("rng-block", state_, be64(counter_++));
}

Scalar Rng::scalar() {
    // 512 bits reduced mod q keeps the distribution effectively uniform.
    return Scalar::from_int(be_to_int(bytes(64)));
}

// ---- sealed box ---------------------------------------------------------------

namespace {
Bytes keystream(const SymKey& key, const Digest& nonce, std::size_t n) {
    Bytes out;
    out.reserve(n);
    std::uint64_t block = 0;
    while (out.size() < n) {
        Digest ks = H("seal-keystream", key.key, nonce, be64(block++));
        std::size_t take = std::min(kDigestLen, n - out.size());
        out.insert(out.end(), ks.bytes.begin(),
                   ks.bytes.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

Digest seal_tag(const SymKey& key, const Digest& nonce, BytesView body) {
    return H("seal-tag", key.key, nonce, body);
}
}  // namespace

SealedBox sym_encrypt(const SymKey& key, BytesView plaintext, Rng& rng) {
    SealedBox box;
    box.nonce = rng.digest();
    Bytes ks = keystream(key, box.nonce, plaintext.size());
    box.body.resize(plaintext.size());
    for (std::size_t i = 0; i < plaintext.size(); ++i) box.body[i] = plaintext[i] ^ ks[i];
    box.tag = seal_tag(key, box.nonce, box.body);
    return box;
}

std::optional<Bytes> sym_decrypt(const SymKey& key, const SealedBox& box) {
    if (seal_tag(key, box.nonce, box.body) != box.tag) return std::nullopt;
    Bytes ks = keystream(key, box.nonce, box.body.size());
    Bytes out(box.body.size());
    for (std::size_t i = 0; i < box.body.size(); ++i) out[i] = box.body[i] ^ ks[i];
    return out;
}

Bytes sealed_box_bytes(const SealedBox& box) {
    ByteWriter w;
    w.raw(box.nonce).var(box.body).raw(box.tag);
    return w.take();
}

std::optional<SealedBox> parse_sealed_box(BytesView b) {
    ByteReader r(b);
    auto nonce = r.raw(kDigestLen);
    auto body = r.var();
    auto tag = r.raw(kDigestLen);
    if (!nonce || !body || !tag || !r.at_end()) return std::nullopt;
    SealedBox box;
    box.nonce = *digest_from_bytes(*nonce);
    box.body = std::move(*body);
    box.tag = *digest_from_bytes(*tag);
    return box;
}

}  // namespace smclab::crypto
