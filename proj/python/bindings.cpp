#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smclab/evaluation.hpp"
#include "smclab/fixtures.hpp"
#include "smclab/scenarios.hpp"

namespace py = pybind11;

namespace {

using namespace smclab;

ProtocolId protocol_from(const std::string& name) {
    auto p = parse_protocol(name);
    if (!p) throw py::value_error("unknown protocol: " + name);
    return *p;
}

py::bytes as_py(const crypto::Digest& d) {
    return py::bytes(reinterpret_cast<const char*>(d.bytes.data()), d.bytes.size());
}

crypto::Digest digest_from(const py::bytes& b) {
    std::string s = b;
    auto d = crypto::digest_from_bytes(
        BytesView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    if (!d) throw py::value_error("digest must be exactly 32 bytes");
    return *d;
}

py::object optional_hex(const std::optional<crypto::Digest>& d) {
    if (!d) return py::none();
    return py::str(crypto::to_hex(*d));
}

py::dict honest_run_py(const std::string& protocol, std::uint64_t seed, std::uint64_t delta_t) {
    ProtocolId p = protocol_from(protocol);
    auto opt = scenarios::default_options(p);
    opt.seed = seed;
    opt.delta_t = delta_t;
    auto outcome = scenarios::honest_run(p, opt);
    py::dict out;
    out["accepted"] = outcome.accepted;
    out["reject_reason"] = outcome.reject_reason;
    out["user_sk"] = optional_hex(outcome.user_sk);
    out["server_sk"] = optional_hex(outcome.server_sk);
    out["envelopes"] = outcome.transcript.network_envelope_count();
    out["transcript"] = outcome.transcript.export_text();
    return out;
}

py::dict attack_run_py(const std::string& protocol, const std::vector<std::string>& dictionary,
                       std::uint64_t seed, std::uint64_t delta_t) {
    ProtocolId p = protocol_from(protocol);
    auto opt = scenarios::default_options(p);
    opt.seed = seed;
    opt.delta_t = delta_t;
    auto outcome = scenarios::attack_run(p, dictionary, opt);
    py::dict out;
    out["succeeded"] = outcome.succeeded;
    out["not_found"] = outcome.not_found;
    out["password"] = outcome.recovered_password;
    out["guesses_tried"] = outcome.guesses_tried;
    out["login_requests_sent"] = outcome.login_requests_sent;
    out["sent_to_server"] = outcome.sent_to_server;
    out["received_from_server"] = outcome.received_from_server;
    out["masquerade_accepted"] = outcome.masquerade_accepted;
    out["attacker_sk"] = optional_hex(outcome.attacker_sk);
    out["server_sk"] = optional_hex(outcome.server_sk);
    out["online_envelopes"] = outcome.transcript.network_envelope_count();
    out["transcript"] = outcome.transcript.export_text();
    return out;
}

py::dict evaluate_py(std::uint64_t seed) {
    auto matrix = evaluation::run_attack_scenarios(seed);
    py::list records;
    for (ProtocolId p : kAllProtocols) {
        for (evaluation::ReqId r : evaluation::kAllRequirements) {
            const auto& v = matrix.cell(p, r);
            py::dict rec;
            rec["protocol"] = std::string(to_string(p));
            rec["requirement"] = std::string(evaluation::to_string(r));
            rec["status"] = std::string(evaluation::to_string(v.status));
            py::list evidence;
            for (const auto& e : v.evidence) {
                py::dict ev;
                ev["kind"] = e.kind;
                ev["detail"] = e.detail;
                ev["seed"] = e.seed;
                evidence.append(ev);
            }
            rec["evidence"] = evidence;
            records.append(rec);
        }
    }
    py::dict out;
    out["records"] = records;
    out["text"] = evaluation::render_matrix(matrix, evaluation::RenderFormat::text);
    out["structured"] = evaluation::render_matrix(matrix, evaluation::RenderFormat::structured);
    out["conclusions_match"] = !evaluation::first_fixture_mismatch(matrix).has_value();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "smart-card password authentication protocol lab";

    m.attr("DIGEST_LEN") = crypto::kDigestLen;
    m.attr("PROTOCOLS") = std::vector<std::string>{"juang", "hsiang", "kim", "xu", "li"};

    m.def(
        "tuple_hash",
        [](const std::vector<py::bytes>& parts) {
            std::vector<Bytes> raw;
            raw.reserve(parts.size());
            for (const auto& p : parts) {
                std::string s = p;
                raw.push_back(to_bytes(s));
            }
            return as_py(crypto::hash_parts(raw));
        },
        py::arg("parts"), "Length-prefixed tuple hash over a list of byte strings.");

    m.def(
        "xor_digests",
        [](const py::bytes& a, const py::bytes& b) {
            return as_py(crypto::xor_digests(digest_from(a), digest_from(b)));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "pairing_identity_holds",
        [](std::uint64_t a, std::uint64_t s, std::uint64_t q_coeff) {
            using namespace crypto;
            Scalar sa = Scalar::from_u64(a), ss = Scalar::from_u64(s);
            G1Element q = g1_base_mul(Scalar::from_u64(q_coeff));
            G1Element p_s = g1_base_mul(ss);
            return pairing(p_s, g1_scale(q, sa)) == pairing(g1_base_mul(sa), g1_scale(q, ss));
        },
        py::arg("a"), py::arg("s"), py::arg("q_coeff"),
        "Checks e(sP, aQ) == e(aP, sQ) for the given coefficients.");

    m.def("honest_run", &honest_run_py, py::arg("protocol"), py::arg("seed") = 0,
          py::arg("delta_t") = 5,
          "Run the honest flow; returns outcome fields and the transcript.");

    m.def("attack_run", &attack_run_py, py::arg("protocol"), py::arg("dictionary"),
          py::arg("seed") = 0, py::arg("delta_t") = 5,
          "Run the protocol's attack. The dictionary is ignored for xu.");

    m.def(
        "registration_reveals_password",
        [](const std::string& protocol, std::uint64_t seed) {
            ProtocolId p = protocol_from(protocol);
            auto opt = scenarios::default_options(p);
            opt.seed = seed;
            return scenarios::registration_run(p, opt).password_in_payload;
        },
        py::arg("protocol"), py::arg("seed") = 0,
        "True when the registration transcript contains the literal password bytes.");

    m.def("evaluate", &evaluate_py, py::arg("seed") = 0,
          "Run all scenarios and return the verdict matrix records and renderings.");

    m.def(
        "demo_dictionary", [] { return fixtures::demo_dictionary(); },
        "The built-in 1000-entry demo dictionary.");

    m.def(
        "default_password",
        [](const std::string& protocol) {
            return scenarios::default_options(protocol_from(protocol)).creds.password;
        },
        py::arg("protocol"), "The demo victim password used by default scenarios.");
}
