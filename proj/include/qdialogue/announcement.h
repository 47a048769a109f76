#ifndef QDIALOGUE_ANNOUNCEMENT_H
#define QDIALOGUE_ANNOUNCEMENT_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qdialogue/bell.h"

namespace qdialogue {

enum class Mode : uint8_t { Message, Check };
enum class Party : uint8_t { Alice, Bob };
enum class AnnouncementKind : uint8_t { ReceiptAck, ModeReveal, OutcomeReveal, OpReveal };

/// "MM" / "CM".
std::string_view to_string(Mode m);
std::string_view to_string(Party p);
/// "receipt-ack", "mode-reveal", "outcome-reveal", "op-reveal".
std::string_view to_string(AnnouncementKind k);

std::optional<Mode> parse_mode(std::string_view s);
std::optional<Party> parse_party(std::string_view s);
std::optional<AnnouncementKind> parse_announcement_kind(std::string_view s);

/// A public, authenticated classical message. The payload alternative is
/// fixed by the kind; the factories are the only way to build one.
class Announcement {
   public:
    using Payload = std::variant<std::monostate, Mode, BellIndex, PauliCode>;

    static Announcement receipt_ack(Party speaker) { return {speaker, AnnouncementKind::ReceiptAck, std::monostate{}}; }
    static Announcement mode_reveal(Party speaker, Mode mode) { return {speaker, AnnouncementKind::ModeReveal, mode}; }
    static Announcement outcome_reveal(Party speaker, BellIndex outcome) {
        return {speaker, AnnouncementKind::OutcomeReveal, outcome};
    }
    static Announcement op_reveal(Party speaker, PauliCode code) { return {speaker, AnnouncementKind::OpReveal, code}; }

    Party speaker() const { return speaker_; }
    AnnouncementKind kind() const { return kind_; }
    const Payload &payload() const { return payload_; }

    Mode mode() const { return std::get<Mode>(payload_); }
    BellIndex outcome() const { return std::get<BellIndex>(payload_); }
    PauliCode code() const { return std::get<PauliCode>(payload_); }

    bool operator==(const Announcement &) const = default;

   private:
    Announcement(Party speaker, AnnouncementKind kind, Payload payload)
        : speaker_(speaker), kind_(kind), payload_(payload) {}

    Party speaker_;
    AnnouncementKind kind_;
    Payload payload_;
};

}  // namespace qdialogue

#endif
