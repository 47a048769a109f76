#ifndef QDIALOGUE_SERIALIZE_H
#define QDIALOGUE_SERIALIZE_H

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qdialogue/harness.h"
#include "qdialogue/oracle.h"
#include "qdialogue/protocol.h"

namespace qdialogue {

/// A sink refused a write.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

enum class OutputFormat : uint8_t { Text, Csv, Records };
std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view s);

// Transcript records: one JSON object per line with the keys round_id,
// protocol, modes, codes, outcome, announcements, check, decoded, eve in that
// order. Two-bit values are written as strings such as "10" (first bit k or x).
Json transcript_to_json(const RoundTranscript &t);
/// Throws std::invalid_argument on schema violations.
RoundTranscript transcript_from_json(const Json &j);

std::string transcript_to_line(const RoundTranscript &t);
RoundTranscript transcript_from_line(std::string_view line);

/// Writes one line per transcript. Throws IoError if the stream fails.
void write_transcript(std::ostream &out, const RoundTranscript &t);
void write_transcripts(std::ostream &out, std::span<const RoundTranscript> transcripts);

/// Column order of the CSV summary; it follows the RunSummary field order with
/// the derived rates placed after the counters they come from.
std::string summary_csv_header();
Json summary_to_json(const RunSummary &s);
RunSummary summary_from_json(const Json &j);

/// Throws IoError if the stream fails.
void write_summary(std::ostream &out, const RunSummary &s, OutputFormat format);

Json oracle_to_json(const OracleResult &r);
void write_oracle(std::ostream &out, const OracleResult &r, OutputFormat format);

}  // namespace qdialogue

#endif
