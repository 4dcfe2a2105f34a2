#include "smclab/common.hpp"

namespace smclab {

std::string_view to_string(ProtocolId p) {
    switch (p) {
        case ProtocolId::juang: return "juang";
        case ProtocolId::hsiang: return "hsiang";
        case ProtocolId::kim: return "kim";
        case ProtocolId::xu: return "xu";
        case ProtocolId::li: return "li";
    }
    return "?";
}

std::optional<ProtocolId> parse_protocol(std::string_view name) {
    for (ProtocolId p : kAllProtocols) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

}  // namespace smclab
