#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>

#include "smclab/bytes.hpp"

// Simulation-grade primitives for the protocol lab. The groups satisfy their
// algebraic identities exactly but carry no computational hardness: G1/G2
// elements store their own discrete logs, and the hash-to-group exponents are
// derived from a public recipe. Sufficient here, because every attack in this
// lab exploits protocol logic rather than algebra.

namespace smclab::crypto {

using BigInt = boost::multiprecision::cpp_int;

/// Width of every digest, key, padded identity and padded password.
inline constexpr std::size_t kDigestLen = 32;

/// Order of the scalar field and of both pairing groups; 255-bit prime.
const BigInt& group_q();
/// Modulus of the multiplicative group; 256-bit prime with p = 2q + 1.
const BigInt& group_p();
/// Generator of the order-q subgroup mod p.
const BigInt& group_g();

struct Digest {
    std::array<std::uint8_t, kDigestLen> bytes{};

    constexpr bool operator==(const Digest&) const = default;
    operator BytesView() const { return BytesView(bytes.data(), bytes.size()); }
};

std::string to_hex(const Digest& d);
std::optional<Digest> digest_from_hex(std::string_view hex);
std::optional<Digest> digest_from_bytes(BytesView b);  // requires b.size() == kDigestLen

/// Tuple hash: each part is framed with an 8-byte big-endian length prefix,
/// the frames are concatenated and digested. The framing makes the encoding
/// injective: ("ab","c") and ("a","bc") digest differently.
Digest hash_parts(std::initializer_list<BytesView> parts);
Digest hash_parts(std::span<const Bytes> parts);

namespace detail {
inline BytesView as_view(BytesView v) { return v; }
inline BytesView as_view(const Bytes& b) { return BytesView(b.data(), b.size()); }
inline BytesView as_view(const Digest& d) { return d; }
inline BytesView as_view(std::string_view s) {
    return BytesView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}
inline BytesView as_view(const char* s) { return as_view(std::string_view(s)); }
}  // namespace detail

/// H(a, b, ...) — tuple hash over any mix of digests, byte strings and text.
template <typename... Parts>
Digest H(const Parts&... parts) {
    return hash_parts({detail::as_view(parts)...});
}

/// Number of raw digest invocations so far on this thread (cost-model probe).
std::uint64_t hash_invocations();

Digest xor_digests(const Digest& a, const Digest& b);
inline Digest operator^(const Digest& a, const Digest& b) { return xor_digests(a, b); }

/// Right-pad with zero bytes to kDigestLen; rejects longer inputs.
Digest pad_to_digest(BytesView s);
Digest pad_to_digest(std::string_view s);

/// Big-endian increment with wraparound (the "r + 1" rule).
Digest increment(const Digest& d);

// -------------------------------------------------------------------------
// Scalars mod q.

class Scalar {
public:
    Scalar() = default;
    static Scalar from_u64(std::uint64_t v);
    static Scalar from_int(BigInt v);  // reduced into [0, q)
    static Scalar from_digest(const Digest& d);

    const BigInt& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    Scalar inverse() const;  // requires nonzero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    bool operator==(const Scalar&) const = default;

private:
    BigInt v_;  // always in [0, q)
};

Bytes scalar_bytes(const Scalar& s);  // 32-byte big-endian

// -------------------------------------------------------------------------
// Additive pairing-friendly group pair. An element a*P is represented by its
// coefficient a; protocol code treats the representation as opaque.

struct G1Element {
    Scalar exponent;
    bool operator==(const G1Element&) const = default;
};

struct G2Element {
    Scalar exponent;  // e(P,P)^k represented by k
    bool operator==(const G2Element&) const = default;
};

inline G1Element g1_identity() { return {}; }
G1Element g1_base_mul(const Scalar& s);  // s * P
G1Element g1_add(const G1Element& a, const G1Element& b);
G1Element g1_scale(const G1Element& x, const Scalar& s);

inline G2Element g2_identity() { return {}; }
G2Element g2_mul(const G2Element& a, const G2Element& b);
G2Element g2_pow(const G2Element& x, const Scalar& s);

/// Bilinear map: pairing(aX, bY) == g2_pow(pairing(X, Y), a*b).
G2Element pairing(const G1Element& x, const G1Element& y);

/// Map-to-point hash into G1; never returns the identity element.
G1Element map_to_point(BytesView id);
G1Element map_to_point(std::string_view id);

Bytes g1_bytes(const G1Element& x);
Bytes g2_bytes(const G2Element& x);

// -------------------------------------------------------------------------
// Multiplicative group: order-q subgroup of Z_p^*. Values constructed via
// mod_hash_to_group / mod_g_pow lie in the subgroup; arbitrary residues mod p
// also occur (sums of a subgroup element and a digest) and flow through the
// same exponentiation.

struct ModGroupElement {
    BigInt value;  // in [0, p)
    bool operator==(const ModGroupElement&) const = default;
};

/// Public exponent recipe behind mod_hash_to_group: hash of the id, mod q.
Scalar mod_hash_exponent(BytesView id);
Scalar mod_hash_exponent(std::string_view id);
ModGroupElement mod_hash_to_group(BytesView id);  // g^mod_hash_exponent(id)
ModGroupElement mod_hash_to_group(std::string_view id);
ModGroupElement mod_g_pow(const Scalar& s);
ModGroupElement mod_pow(const ModGroupElement& x, const Scalar& s);

BigInt digest_to_int(const Digest& d);  // big-endian interpretation
BigInt add_mod_p(const BigInt& a, const BigInt& b);
BigInt sub_mod_p(const BigInt& a, const BigInt& b);

Bytes int_be32(const BigInt& v);  // 32-byte big-endian; v must fit
BigInt be_to_int(BytesView b);
Bytes mod_bytes(const ModGroupElement& x);

// -------------------------------------------------------------------------
// Deterministic byte generator: counter-mode chain over the tuple hash.
// All randomness in the lab flows from explicitly seeded instances.

class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Independent stream derived from this one's seed state and a label.
    Rng fork(std::string_view label) const;

    Bytes bytes(std::size_t n);
    Digest digest();
    Scalar scalar();

private:
    Rng() = default;
    Digest state_;
    std::uint64_t counter_ = 0;
};

// -------------------------------------------------------------------------
// Symmetric cipher with integrity: hash-keystream encryption plus a hash tag
// binding key, nonce and ciphertext. Decryption fails on any mutation.

struct SymKey {
    Digest key;
    bool operator==(const SymKey&) const = default;
};

struct SealedBox {
    Digest nonce;
    Bytes body;
    Digest tag;
    bool operator==(const SealedBox&) const = default;
};

SealedBox sym_encrypt(const SymKey& key, BytesView plaintext, Rng& rng);
/// Plaintext, or nullopt when the key is wrong or the box was tampered with.
std::optional<Bytes> sym_decrypt(const SymKey& key, const SealedBox& box);

Bytes sealed_box_bytes(const SealedBox& box);
std::optional<SealedBox> parse_sealed_box(BytesView b);

}  // namespace smclab::crypto
