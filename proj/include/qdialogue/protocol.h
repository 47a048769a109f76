#ifndef QDIALOGUE_PROTOCOL_H
#define QDIALOGUE_PROTOCOL_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qdialogue/adversary.h"
#include "qdialogue/announcement.h"
#include "qdialogue/bell.h"
#include "qdialogue/random.h"

namespace qdialogue {

enum class ProtocolKind : uint8_t { Original, Modified };

/// "original" / "modified".
std::string_view to_string(ProtocolKind p);
std::optional<ProtocolKind> parse_protocol(std::string_view s);

/// Everything that happened in one round, in the order it happened.
struct RoundTranscript {
    uint64_t round_id = 0;
    ProtocolKind protocol = ProtocolKind::Original;
    Mode bob_mode = Mode::Message;
    Mode alice_mode = Mode::Message;
    PauliCode bob_code;
    PauliCode alice_code;
    BellIndex outcome;
    std::vector<Announcement> announcements;
    bool check_performed = false;
    /// Present iff check_performed.
    std::optional<bool> check_passed;
    /// Bob's reading of Alice's code.
    std::optional<PauliCode> bob_decoded;
    /// Alice's reading of Bob's code.
    std::optional<PauliCode> alice_decoded;
    /// Absent when Eve learned nothing (including when there is no Eve).
    std::optional<EveReport> eve_report;

    bool operator==(const RoundTranscript &) const = default;
};

/// Snapshot of the pair states a round passes through: after Bob's encoding,
/// as received by Alice, after Alice's encoding, as received by Bob, and after
/// Bob's Bell measurement.
using StateTrace = std::vector<TwoQubitState>;

struct RoundOptions {
    uint64_t round_id = 0;
    /// When false, Bob keeps (x, y) private in rounds where it would only serve
    /// decoding. The CM-CM check still reveals it.
    bool reveal_outcome = true;
    StateTrace *trace = nullptr;
};

/// True iff the outcome equals Bob's code XOR Alice's code.
constexpr bool cm_check(BellIndex outcome, PauliCode bob_code, PauliCode alice_code) {
    return outcome == bell_index_of(bob_code ^ alice_code);
}

/// One round of the original dialogue: only Alice chooses the mode; Bob always
/// encodes his message.
RoundTranscript run_round_original(PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   AdversaryChannel &channel, RandomStream &rng, const RoundOptions &options = {});

/// Same round on a bare channel with no adversary hooks at all.
RoundTranscript run_round_original(PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits, RandomStream &rng,
                                   const RoundOptions &options = {});

/// One round of the dual-mode variant: both parties choose a mode and the
/// check runs iff both chose CM.
RoundTranscript run_round_modified(Mode bob_mode, PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   AdversaryChannel &channel, RandomStream &rng, const RoundOptions &options = {});

RoundTranscript run_round_modified(Mode bob_mode, PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   RandomStream &rng, const RoundOptions &options = {});

}  // namespace qdialogue

#endif
