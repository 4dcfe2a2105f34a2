#include "smclab/simnet.hpp"

#include <sstream>

namespace smclab::sim {

std::string_view to_string(Disposition d) {
    switch (d) {
        case Disposition::delivered: return "delivered";
        case Disposition::intercepted: return "intercepted";
        case Disposition::injected: return "injected";
        case Disposition::dropped: return "dropped";
        case Disposition::card_extracted: return "card_extracted";
    }
    return "?";
}

std::size_t Transcript::network_envelope_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
        if (e.disposition != Disposition::card_extracted) ++n;
    }
    return n;
}

std::size_t Transcript::count_from_to(const PartyId& from, const PartyId& to) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
        if (e.disposition == Disposition::card_extracted) continue;
        if (e.envelope.from == from && e.envelope.to == to) ++n;
    }
    return n;
}

bool Transcript::any_payload_contains(BytesView needle) const {
    for (const auto& e : entries_) {
        if (e.disposition == Disposition::card_extracted) continue;
        if (contains(BytesView(e.envelope.payload.data(), e.envelope.payload.size()), needle)) {
            return true;
        }
    }
    return false;
}

std::string Transcript::export_text() const {
    std::ostringstream out;
    for (const auto& e : entries_) {
        out << e.envelope.sent_at << ' ' << e.envelope.from << ' ' << e.envelope.to << ' '
            << to_string(e.disposition) << ' '
            << to_hex(BytesView(e.envelope.payload.data(), e.envelope.payload.size())) << '\n';
    }
    return out.str();
}

Scenario::Scenario(std::uint64_t seed) : seed_(seed) {}

void Scenario::register_party(const PartyId& id, Handler handler) {
    if (id.empty()) throw ScenarioError("party name must be non-empty");
    if (parties_.contains(id)) throw ScenarioError("party already registered: " + id);
    parties_[id] = Party{std::move(handler), std::nullopt};
}

void Scenario::set_adversary(const PartyId& id, AdversaryPolicy policy) {
    require_party(id, "adversary");
    adversary_ = id;
    policy_ = std::move(policy);
}

Scenario::Party& Scenario::require_party(const PartyId& id, const char* what) {
    auto it = parties_.find(id);
    if (it == parties_.end()) {
        throw ScenarioError(std::string("unknown ") + what + ": " + id);
    }
    return it->second;
}

DeliveryOutcome Scenario::send(const PartyId& from, const PartyId& to, Bytes payload) {
    require_party(from, "sender");
    Party& recipient = require_party(to, "recipient");

    Envelope env{from, to, std::move(payload), clock_};

    if (policy_.mode == AdversaryMode::intercept && !adversary_.empty() && to != adversary_ &&
        (!policy_.predicate || policy_.predicate(env))) {
        captured_.push_back(env);
        transcript_.append(std::move(env), Disposition::intercepted);
        return {Disposition::intercepted};
    }

    if (policy_.mode == AdversaryMode::eavesdrop && !adversary_.empty() && to != adversary_) {
        captured_.push_back(env);
    }

    transcript_.append(env, Disposition::delivered);
    if (recipient.handler) recipient.handler(*this, env);
    return {Disposition::delivered};
}

DeliveryOutcome Scenario::inject(Envelope env) {
    Party& recipient = require_party(env.to, "recipient");
    env.sent_at = clock_;
    transcript_.append(env, Disposition::injected);
    if (recipient.handler) recipient.handler(*this, env);
    return {Disposition::injected};
}

void Scenario::drop(Envelope env) {
    env.sent_at = clock_;
    transcript_.append(std::move(env), Disposition::dropped);
}

Ticks Scenario::advance_clock(Ticks dt) {
    clock_ += dt;
    return clock_;
}

void Scenario::give_card(const PartyId& owner, Bytes card_contents) {
    require_party(owner, "card owner").card = std::move(card_contents);
}

bool Scenario::has_card(const PartyId& owner) const {
    auto it = parties_.find(owner);
    return it != parties_.end() && it->second.card.has_value();
}

Bytes Scenario::extract_card(const PartyId& victim) {
    if (adversary_.empty()) throw ScenarioError("no adversary configured");
    Party& p = require_party(victim, "card owner");
    if (!p.card) throw ScenarioError("party holds no card: " + victim);
    transcript_.append(Envelope{victim, adversary_, *p.card, clock_},
                       Disposition::card_extracted);
    return *p.card;
}

crypto::Rng Scenario::fork_rng(std::string_view label) const {
    return crypto::Rng(seed_).fork(label);
}

}  // namespace smclab::sim
