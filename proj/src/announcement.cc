#include "qdialogue/announcement.h"

namespace qdialogue {

std::string_view to_string(Mode m) { return m == Mode::Message ? "MM" : "CM"; }

std::string_view to_string(Party p) { return p == Party::Alice ? "alice" : "bob"; }

std::string_view to_string(AnnouncementKind k) {
    switch (k) {
        case AnnouncementKind::ReceiptAck:
            return "receipt-ack";
        case AnnouncementKind::ModeReveal:
            return "mode-reveal";
        case AnnouncementKind::OutcomeReveal:
            return "outcome-reveal";
        case AnnouncementKind::OpReveal:
            return "op-reveal";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "MM") {
        return Mode::Message;
    }
    if (s == "CM") {
        return Mode::Check;
    }
    return std::nullopt;
}

std::optional<Party> parse_party(std::string_view s) {
    if (s == "alice") {
        return Party::Alice;
    }
    if (s == "bob") {
        return Party::Bob;
    }
    return std::nullopt;
}

std::optional<AnnouncementKind> parse_announcement_kind(std::string_view s) {
    for (auto k : {AnnouncementKind::ReceiptAck, AnnouncementKind::ModeReveal, AnnouncementKind::OutcomeReveal,
                   AnnouncementKind::OpReveal}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace qdialogue
