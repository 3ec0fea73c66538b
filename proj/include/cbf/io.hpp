#pragma once

// Text, JSON and CSV serialization of word sets, cardinality tables and
// verification reports.
//
//   word set JSON:  {"n":7,"provenance":"cbfs_odd","cardinality":5,"words":["1101010",...]}
//   report JSON:    {"ok":false,"method":"trie","checked_pairs":4,
//                    "violations":[{"a":"110011010","b":"111001100","factor":"1100"}]}
//   table CSV:      n,bf,cbfs,kernel
//
// Counts that do not fit in 64 bits are written as decimal strings in JSON.

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "cbf/baseline.hpp"
#include "cbf/verification.hpp"
#include "cbf/word_set.hpp"

namespace cbf {

enum class Format { Text, Json, Csv };

/// Throws Error(ParseError) for anything but "text" / "json" / "csv".
Format format_from_string(std::string_view name);

/// Newline-separated '0'/'1' words; empty lines are skipped. Any other
/// character throws Error(ParseError) naming the 1-based line number.
std::vector<BinaryWord> read_words(std::istream& in);

/// Parses the word set JSON schema above. Throws Error(ParseError).
WordSet read_word_set_json(std::istream& in);

void write(std::ostream& out, const WordSet& s, Format format);
void write(std::ostream& out, const CardinalityTable& table, Format format);
void write(std::ostream& out, const VerificationReport& report, Format format);

/// Writes to a file, throwing Error(IoFailure) if it cannot be written.
template <typename T>
void export_to(const std::filesystem::path& destination, const T& value, Format format);

extern template void export_to(const std::filesystem::path&, const WordSet&, Format);
extern template void export_to(const std::filesystem::path&, const CardinalityTable&, Format);
extern template void export_to(const std::filesystem::path&, const VerificationReport&, Format);

}  // namespace cbf
