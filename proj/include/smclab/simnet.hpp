#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smclab/common.hpp"
#include "smclab/crypto.hpp"

// Deterministic single-threaded network simulation. A Scenario owns a logical
// clock, a registry of parties with optional message handlers, an adversary
// hook that can observe, intercept, inject or drop envelopes, and an
// append-only transcript of everything that happened. A Scenario is
// single-owner: no two operations on the same instance may run concurrently.

namespace smclab::sim {

using Ticks = std::uint64_t;

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Disposition { delivered, intercepted, injected, dropped, card_extracted };

std::string_view to_string(Disposition d);

struct Envelope {
    PartyId from;
    PartyId to;
    Bytes payload;
    Ticks sent_at = 0;
};

struct TranscriptEntry {
    Envelope envelope;
    Disposition disposition;
};

struct DeliveryOutcome {
    Disposition disposition;
};

class Transcript {
public:
    void append(Envelope env, Disposition d) { entries_.push_back({std::move(env), d}); }

    const std::vector<TranscriptEntry>& entries() const { return entries_; }

    /// Envelopes that crossed the simulated network (card extractions excluded).
    std::size_t network_envelope_count() const;
    std::size_t count_from_to(const PartyId& from, const PartyId& to) const;
    bool any_payload_contains(BytesView needle) const;

    /// One line per entry: "<ticks> <from> <to> <disposition> <hex payload>".
    std::string export_text() const;

private:
    std::vector<TranscriptEntry> entries_;
};

enum class AdversaryMode { passthrough, eavesdrop, intercept };

struct AdversaryPolicy {
    AdversaryMode mode = AdversaryMode::passthrough;
    /// Under intercept mode, envelopes matching this are diverted to the
    /// adversary instead of being delivered. Unset means match-all.
    std::function<bool(const Envelope&)> predicate;
};

class Scenario {
public:
    using Handler = std::function<void(Scenario&, const Envelope&)>;

    explicit Scenario(std::uint64_t seed);

    void register_party(const PartyId& id, Handler handler = nullptr);
    bool has_party(const PartyId& id) const { return parties_.contains(id); }

    void set_adversary(const PartyId& id, AdversaryPolicy policy);

    /// Stamps the envelope with the current clock, logs it, and under
    /// passthrough hands it to the recipient's handler. Under an intercept
    /// policy with a matching predicate the envelope is surrendered to the
    /// adversary's capture queue instead.
    DeliveryOutcome send(const PartyId& from, const PartyId& to, Bytes payload);

    /// Adversary puts an envelope on the wire; always reaches the handler.
    DeliveryOutcome inject(Envelope env);

    /// Adversary discards a previously captured envelope.
    void drop(Envelope env);

    Ticks advance_clock(Ticks dt);
    Ticks now() const { return clock_; }

    void give_card(const PartyId& owner, Bytes card_contents);
    bool has_card(const PartyId& owner) const;

    /// Lost-card event: copies the victim's card contents to the adversary and
    /// logs the extraction in the transcript.
    Bytes extract_card(const PartyId& victim);

    /// Deterministic per-label stream derived from the scenario seed.
    crypto::Rng fork_rng(std::string_view label) const;
    std::uint64_t seed() const { return seed_; }

    const Transcript& transcript() const { return transcript_; }
    const std::vector<Envelope>& captured() const { return captured_; }

private:
    struct Party {
        Handler handler;
        std::optional<Bytes> card;
    };

    Party& require_party(const PartyId& id, const char* what);

    std::uint64_t seed_;
    Ticks clock_ = 0;
    Transcript transcript_;
    std::map<PartyId, Party> parties_;
    PartyId adversary_;
    AdversaryPolicy policy_;
    std::vector<Envelope> captured_;
};

}  // namespace smclab::sim
