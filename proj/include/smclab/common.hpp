#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace smclab {

/// Party names double as protocol identities (the IDs hashed into messages).
using PartyId = std::string;

/// The five schemes under review, keyed by first author.
enum class ProtocolId { juang, hsiang, kim, xu, li };

inline constexpr ProtocolId kAllProtocols[] = {ProtocolId::juang, ProtocolId::hsiang,
                                               ProtocolId::kim, ProtocolId::xu, ProtocolId::li};

std::string_view to_string(ProtocolId p);
std::optional<ProtocolId> parse_protocol(std::string_view name);

}  // namespace smclab
