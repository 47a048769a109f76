#ifndef QDIALOGUE_ADVERSARY_H
#define QDIALOGUE_ADVERSARY_H

#include <optional>
#include <span>
#include <string_view>

#include "qdialogue/announcement.h"
#include "qdialogue/bell.h"
#include "qdialogue/random.h"

namespace qdialogue {

enum class Strategy : uint8_t { None, Disturbance, MeasureResend, BellSubstitution };

/// "none", "disturbance", "measure-resend", "bell-substitution".
std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

/// Eve's private memory during one round.
struct EveState {
    /// Bob's genuine pair, parked while Eve holds his travel qubit.
    std::optional<TwoQubitState> stored_bob_pair;
    /// Eve's own pair (h', t') as prepared.
    std::optional<TwoQubitState> eve_pair;
    std::optional<PauliCode> eve_code;
    std::optional<PauliCode> inferred_alice;
    std::optional<PauliCode> inferred_bob;
};

/// What Eve claims to know at the end of a round.
struct EveReport {
    std::optional<PauliCode> inferred_alice;
    /// Inference before reading any announcement. No modeled strategy has one.
    std::optional<PauliCode> inferred_bob_private;
    /// Inference after reading the public announcements.
    std::optional<PauliCode> inferred_bob_public;

    bool empty() const { return !inferred_alice && !inferred_bob_private && !inferred_bob_public; }
    bool operator==(const EveReport &) const = default;
};

/// The quantum channel between Bob and Alice with its two interception points.
///
/// Only the travel qubit ever passes through the channel. Under
/// bell-substitution Eve swaps in her own pair on the forward leg, so the
/// "world" handed to Alice is Eve's pair and the one handed back on the return
/// leg is Bob's again. The two pairs never interact, which keeps every state a
/// two-qubit one.
class AdversaryChannel {
   public:
    explicit AdversaryChannel(Strategy strategy = Strategy::None) : strategy_(strategy) {}

    Strategy strategy() const { return strategy_; }
    const EveState &eve_state() const { return eve_; }

    /// Travel qubit in flight Bob -> Alice. Returns the pair whose travel qubit
    /// Alice receives. Throws std::logic_error if called twice without a return.
    TwoQubitState on_forward(const TwoQubitState &world, RandomStream &rng);

    /// Travel qubit in flight Alice -> Bob. Returns the pair Bob measures.
    /// Throws std::logic_error if no forward leg preceded it.
    TwoQubitState on_return(const TwoQubitState &world, RandomStream &rng);

    /// Eve's inferences given the round's public announcements.
    EveReport observe_public(std::span<const Announcement> transcript) const;

   private:
    Strategy strategy_;
    EveState eve_;
    bool in_flight_ = false;
};

}  // namespace qdialogue

#endif
