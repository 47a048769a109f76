#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "qdialogue/bell.h"
#include "qdialogue/harness.h"
#include "qdialogue/oracle.h"
#include "qdialogue/protocol.h"
#include "qdialogue/serialize.h"

namespace py = pybind11;
using namespace qdialogue;

namespace {

using Bits = std::pair<int, int>;

bool bit(int v) {
    if (v != 0 && v != 1) {
        throw py::value_error("bits must be 0 or 1");
    }
    return v == 1;
}

PauliCode to_code(const Bits &b) { return PauliCode{bit(b.first), bit(b.second)}; }
BellIndex to_index(const Bits &b) { return BellIndex{bit(b.first), bit(b.second)}; }
Bits from_code(PauliCode c) { return {c.k, c.l}; }
Bits from_index(BellIndex b) { return {b.x, b.y}; }

Qubit to_qubit(const std::string &s) {
    if (s == "home") {
        return Qubit::Home;
    }
    if (s == "travel") {
        return Qubit::Travel;
    }
    throw py::value_error("target must be 'home' or 'travel'");
}

ProtocolKind to_protocol(const std::string &s) {
    auto p = parse_protocol(s);
    if (!p) {
        throw py::value_error("unknown protocol: " + s);
    }
    return *p;
}

Strategy to_strategy(const std::string &s) {
    auto v = parse_strategy(s);
    if (!v) {
        throw py::value_error("unknown attack: " + s);
    }
    return *v;
}

py::object json_to_python(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact two-qubit simulator of the quantum dialogue protocol and its attacks.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "bell_state", [](const Bits &idx) { return bell_state(to_index(idx)).amplitudes(); }, py::arg("index"),
        "Amplitudes of psi_{x,y} over |00>, |01>, |10>, |11> (home qubit first).");

    m.def(
        "apply_pauli",
        [](const std::array<Amplitude, 4> &amps, const Bits &code, const std::string &target) {
            return apply_pauli(TwoQubitState(amps), to_code(code), to_qubit(target)).amplitudes();
        },
        py::arg("amplitudes"), py::arg("code"), py::arg("target") = "travel");

    m.def(
        "compose",
        [](const Bits &outer, const Bits &inner) {
            PhasedPauli p = compose(to_code(outer), to_code(inner));
            return std::make_pair(from_code(p.code), phase_value(p.phase));
        },
        py::arg("outer"), py::arg("inner"), "outer * inner as ((k, l), phase).");

    m.def(
        "bell_probabilities",
        [](const std::array<Amplitude, 4> &amps) { return bell_probabilities(TwoQubitState(amps)); },
        py::arg("amplitudes"));

    m.def(
        "decode_bits", [](const Bits &outcome, const Bits &own) { return from_code(decode_bits(to_index(outcome), to_code(own))); },
        py::arg("outcome"), py::arg("own"));

    m.def(
        "cm_check",
        [](const Bits &outcome, const Bits &bob, const Bits &alice) {
            return cm_check(to_index(outcome), to_code(bob), to_code(alice));
        },
        py::arg("outcome"), py::arg("bob_code"), py::arg("alice_code"));

    m.def(
        "run_sessions",
        [](const std::string &protocol, const std::string &attack, uint64_t rounds, double p_cm, uint64_t seed,
           bool keep_transcripts, unsigned threads) {
            RunConfig config;
            config.protocol = to_protocol(protocol);
            config.strategy = to_strategy(attack);
            config.rounds = rounds;
            config.p_cm = p_cm;
            config.seed = seed;
            config.threads = threads;
            std::vector<std::string> lines;
            TranscriptSink sink;
            if (keep_transcripts) {
                sink = [&](const RoundTranscript &t) { lines.push_back(transcript_to_line(t)); };
            }
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run_sessions(config, sink);
            }
            py::dict out;
            out["summary"] = json_to_python(summary_to_json(r.summary));
            out["transcripts"] = lines;
            return out;
        },
        py::arg("protocol") = "original", py::arg("attack") = "none", py::arg("rounds") = 1000,
        py::arg("p_cm") = 0.5, py::arg("seed") = 0, py::arg("keep_transcripts") = false, py::arg("threads") = 1,
        "Monte Carlo run. Returns {'summary': dict, 'transcripts': [json line, ...]}.");

    m.def(
        "exact_oracle",
        [](const std::string &protocol, const std::string &attack) {
            return json_to_python(oracle_to_json(exact_oracle(to_protocol(protocol), to_strategy(attack))));
        },
        py::arg("protocol") = "original", py::arg("attack") = "none");

    m.def(
        "run_dialogue",
        [](const std::string &alice_text, const std::string &bob_text, const std::string &protocol,
           const std::string &attack, uint64_t seed, bool suppress_outcome_reveal) {
            DialogueConfig c{alice_text, bob_text, to_protocol(protocol), to_strategy(attack), seed,
                             !suppress_outcome_reveal};
            DialogueResult r = run_dialogue(c);
            py::dict out;
            out["bob_received"] = r.texts.bob_received;
            out["alice_received"] = r.texts.alice_received;
            out["eve_alice"] = r.texts.eve_alice;
            out["eve_bob"] = r.texts.eve_bob;
            out["summary"] = json_to_python(summary_to_json(r.summary));
            return out;
        },
        py::arg("alice_text"), py::arg("bob_text"), py::arg("protocol") = "original", py::arg("attack") = "none",
        py::arg("seed") = 0, py::arg("suppress_outcome_reveal") = false);
}
