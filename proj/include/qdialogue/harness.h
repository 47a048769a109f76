#ifndef QDIALOGUE_HARNESS_H
#define QDIALOGUE_HARNESS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdialogue/adversary.h"
#include "qdialogue/protocol.h"

namespace qdialogue {

/// Invalid experiment configuration. `field()` names the offending setting
/// using its command-line spelling (e.g. "rounds", "p-cm").
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string field, const std::string &what) : std::invalid_argument(what), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

   private:
    std::string field_;
};

enum class MessageSource : uint8_t { UniformRandom, Text };

struct RunConfig {
    ProtocolKind protocol = ProtocolKind::Original;
    Strategy strategy = Strategy::None;
    uint64_t rounds = 1;
    /// Probability that each party independently picks CM in a round.
    double p_cm = 0.5;
    uint64_t seed = 0;
    MessageSource message_source = MessageSource::UniformRandom;
    std::string alice_text;
    std::string bob_text;
    bool reveal_outcome = true;
    /// Worker threads for uniform-random runs. Results do not depend on it.
    unsigned threads = 1;

    /// Throws ConfigError.
    void validate() const;
};

/// Aggregate metrics over a run. Counts are exact; rates are derived on demand
/// and are absent when their denominator is zero.
struct RunSummary {
    uint64_t rounds_total = 0;
    /// Rounds that ran the eavesdropping check.
    uint64_t rounds_cm = 0;
    /// Two-way message rounds.
    uint64_t rounds_mm = 0;
    /// One-way rounds of the modified protocol.
    uint64_t rounds_alice_cm_bob_mm = 0;
    uint64_t rounds_alice_mm_bob_cm = 0;
    uint64_t checks_failed = 0;
    /// Alice decoding Bob's code.
    uint64_t alice_decodes = 0;
    uint64_t alice_decodes_correct = 0;
    /// Bob decoding Alice's code.
    uint64_t bob_decodes = 0;
    uint64_t bob_decodes_correct = 0;
    uint64_t eve_alice_inferences = 0;
    uint64_t eve_alice_correct = 0;
    uint64_t eve_bob_public_inferences = 0;
    uint64_t eve_bob_public_correct = 0;
    uint64_t throughput_bits = 0;

    std::optional<double> detection_rate() const;
    std::optional<double> alice_decode_accuracy() const;
    std::optional<double> bob_decode_accuracy() const;
    std::optional<double> eve_alice_accuracy() const;
    std::optional<double> eve_bob_public_accuracy() const;

    RunSummary &operator+=(const RunSummary &o);
    bool operator==(const RunSummary &) const = default;
};

/// Texts as reassembled by each receiver; absent when some piece never arrived.
struct DialogueTexts {
    std::optional<std::string> bob_received;  ///< Alice's text as Bob decoded it.
    std::optional<std::string> alice_received;  ///< Bob's text as Alice decoded it.
    std::optional<std::string> eve_alice;
    std::optional<std::string> eve_bob;
};

struct RunResult {
    RunSummary summary;
    /// Set for MessageSource::Text runs.
    std::optional<DialogueTexts> texts;
};

using TranscriptSink = std::function<void(const RoundTranscript &)>;

/// Rounds per random substream. Chunk c draws from
/// RandomStream::substream(seed, c) and covers rounds [c * kChunkRounds, ...).
inline constexpr uint64_t kChunkRounds = 1 << 14;

/// Runs config.rounds rounds. Each round draws, in order: Alice picks CM,
/// Bob picks CM (ignored by the original protocol), Alice's random code,
/// Bob's random code; the round itself then draws Eve's and the measurement
/// randomness. Transcripts reach `sink` in round order.
RunResult run_sessions(const RunConfig &config, const TranscriptSink &sink = {});

/// Each byte becomes four codes, most significant bit pair first; (k, l) =
/// (higher bit, lower bit).
std::vector<PauliCode> text_to_codes(std::string_view text);
/// Inverse of text_to_codes. Throws std::invalid_argument if the length is not a multiple of 4.
std::string codes_to_text(std::span<const PauliCode> codes);

struct DialogueConfig {
    std::string alice_text;
    std::string bob_text;
    ProtocolKind protocol = ProtocolKind::Original;
    Strategy strategy = Strategy::None;
    uint64_t seed = 0;
    bool reveal_outcome = true;
};

struct DialogueResult {
    DialogueTexts texts;
    RunSummary summary;
};

/// Message-mode-only exchange of both texts.
DialogueResult run_dialogue(const DialogueConfig &config);

}  // namespace qdialogue

#endif
