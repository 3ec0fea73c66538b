#include "cbf/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "cbf/error.hpp"
#include "json.hpp"

namespace cbf {

namespace {

using nlohmann::json;

json count_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return json(value.convert_to<std::uint64_t>());
  }
  return json(value.str());
}

json word_set_to_json(const WordSet& s) {
  json words = json::array();
  for (const auto& w : s) words.push_back(w.to_string());
  return json{{"n", s.n()},
              {"provenance", std::string(to_string(s.provenance()))},
              {"cardinality", s.size()},
              {"words", std::move(words)}};
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

std::vector<BinaryWord> read_words(std::istream& in) {
  std::vector<BinaryWord> words;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    try {
      words.push_back(BinaryWord::parse(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return words;
}

WordSet read_word_set_json(std::istream& in) {
  try {
    const json doc = json::parse(in);
    const auto n = doc.at("n").get<std::size_t>();
    const auto provenance = provenance_from_string(doc.at("provenance").get<std::string>());
    std::vector<BinaryWord> words;
    for (const auto& w : doc.at("words")) words.push_back(BinaryWord::parse(w.get<std::string>()));
    WordSet s(n, std::move(words), provenance);
    if (doc.at("cardinality").get<std::size_t>() != s.size()) {
      throw Error(ErrorCode::ParseError, "cardinality does not match the word list");
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed word set JSON: ") + e.what());
  }
}

void write(std::ostream& out, const WordSet& s, Format format) {
  switch (format) {
    case Format::Text:
      for (const auto& w : s) out << w.to_string() << '\n';
      break;
    case Format::Json:
      out << word_set_to_json(s).dump() << '\n';
      break;
    case Format::Csv:
      out << "word\n";
      for (const auto& w : s) out << w.to_string() << '\n';
      break;
  }
}

void write(std::ostream& out, const CardinalityTable& table, Format format) {
  switch (format) {
    case Format::Text: {
      out << std::setw(4) << "n" << std::setw(22) << "bf" << std::setw(22) << "cbfs"
          << std::setw(22) << "kernel" << "  cbfs>kernel\n";
      for (const auto& row : table.rows) {
        out << std::setw(4) << row.n << std::setw(22) << row.bf_count.str() << std::setw(22)
            << row.cbfs_count.str() << std::setw(22) << row.kernel_count.str() << "  "
            << (row.cbfs_exceeds_kernel() ? "yes" : "no") << '\n';
      }
      break;
    }
    case Format::Json: {
      json rows = json::array();
      for (const auto& row : table.rows) {
        rows.push_back(json{{"n", row.n},
                            {"bf", count_to_json(row.bf_count)},
                            {"cbfs", count_to_json(row.cbfs_count)},
                            {"kernel", count_to_json(row.kernel_count)},
                            {"cbfs_exceeds_kernel", row.cbfs_exceeds_kernel()}});
      }
      out << json{{"from", table.n_min}, {"to", table.n_max}, {"rows", std::move(rows)}}.dump()
          << '\n';
      break;
    }
    case Format::Csv:
      out << "n,bf,cbfs,kernel\n";
      for (const auto& row : table.rows) {
        out << row.n << ',' << row.bf_count.str() << ',' << row.cbfs_count.str() << ','
            << row.kernel_count.str() << '\n';
      }
      break;
  }
}

void write(std::ostream& out, const VerificationReport& report, Format format) {
  switch (format) {
    case Format::Text:
      out << (report.ok ? "ok" : "violations") << " method=" << to_string(report.method)
          << " checked_pairs=" << report.checked_pairs
          << " violations=" << report.violations.size() << '\n';
      for (const auto& v : report.violations) {
        out << v.word_a.to_string() << ' ' << v.word_b.to_string() << ' '
            << v.factor.bits.to_string() << '\n';
      }
      break;
    case Format::Json: {
      json violations = json::array();
      for (const auto& v : report.violations) {
        violations.push_back(json{{"a", v.word_a.to_string()},
                                  {"b", v.word_b.to_string()},
                                  {"factor", v.factor.bits.to_string()}});
      }
      out << json{{"ok", report.ok},
                  {"method", std::string(to_string(report.method))},
                  {"checked_pairs", report.checked_pairs},
                  {"violations", std::move(violations)}}
                 .dump()
          << '\n';
      break;
    }
    case Format::Csv:
      out << "a,b,factor\n";
      for (const auto& v : report.violations) {
        out << v.word_a.to_string() << ',' << v.word_b.to_string() << ','
            << v.factor.bits.to_string() << '\n';
      }
      break;
  }
}

template <typename T>
void export_to(const std::filesystem::path& destination, const T& value, Format format) {
  std::ofstream file(destination);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + destination.string());
  write(file, value, format);
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "failed writing " + destination.string());
}

template void export_to(const std::filesystem::path&, const WordSet&, Format);
template void export_to(const std::filesystem::path&, const CardinalityTable&, Format);
template void export_to(const std::filesystem::path&, const VerificationReport&, Format);

}  // namespace cbf
