#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cbf/baseline.hpp"
#include "cbf/construction.hpp"
#include "cbf/error.hpp"
#include "cbf/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cbf;

namespace {

std::string render(const auto& value, Format format) {
  std::ostringstream out;
  write(out, value, format);
  return out.str();
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("kernel_cardinality examples") {
  CHECK(kernel_cardinality(3) == 1);
  CHECK(kernel_cardinality(4) == 1);
  CHECK(kernel_cardinality(9) == 13);
  CHECK(kernel_cardinality(15) == 233);
  CHECK_THROWS_AS(kernel_cardinality(2), Error);
}

TEST_CASE("kernel_cardinality follows its recurrence up to 40") {
  for (std::size_t n = 5; n <= 40; ++n) {
    CHECK(kernel_cardinality(n) == kernel_cardinality(n - 1) + kernel_cardinality(n - 2));
  }
}

TEST_CASE("compare_table examples") {
  const auto table = compare_table(3, 15);
  REQUIRE(table.rows.size() == 13);
  const unsigned cbfs_col[] = {1, 1, 2, 3, 5, 8, 14, 23, 42, 72, 132, 227, 429};
  const unsigned kernel_col[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  for (std::size_t i = 0; i < 13; ++i) {
    const auto& row = table.rows[i];
    CHECK(row.n == i + 3);
    CHECK(row.cbfs_count == cbfs_col[i]);
    CHECK(row.kernel_count == kernel_col[i]);
    CHECK(row.cbfs_count <= row.bf_count);
    CHECK(row.cbfs_exceeds_kernel() == (row.n >= 9));
  }
  const auto nine = compare_table(9, 9);
  REQUIRE(nine.rows.size() == 1);
  CHECK(nine.rows[0].cbfs_count == 14);
  CHECK(nine.rows[0].kernel_count == 13);
  for (const auto& row : compare_table(3, 8).rows) CHECK(row.cbfs_count == row.kernel_count);
}

TEST_CASE("compare_table cross-check and errors") {
  CHECK(compare_table(3, 16, true).rows.size() == 14);
  CHECK_THROWS_AS(compare_table(2, 5), Error);
  CHECK_THROWS_AS(compare_table(8, 5), Error);
  try {
    compare_table(3, 26, true);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("export word sets") {
  CHECK(render(cbfs(4), Format::Text) == "1100\n");
  const auto doc = nlohmann::json::parse(render(cbfs(7), Format::Json));
  CHECK(doc.at("n") == 7);
  CHECK(doc.at("provenance") == "cbfs_odd");
  CHECK(doc.at("cardinality") == 5);
  CHECK(doc.at("words").size() == 5);
  CHECK(doc.at("words")[0] == "1101010");
  CHECK(render(cbfs(5), Format::Csv) == "word\n11010\n11100\n");
}

TEST_CASE("export tables") {
  const auto csv = render(compare_table(3, 15), Format::Csv);
  CHECK(csv.rfind("n,bf,cbfs,kernel\n", 0) == 0);
  CHECK(count_lines(csv) == 14);
  CHECK(csv.find("\n9,148,14,13\n") != std::string::npos);
  const auto doc = nlohmann::json::parse(render(compare_table(9, 10), Format::Json));
  CHECK(doc.at("rows").size() == 2);
  CHECK(doc.at("rows")[1].at("cbfs") == 23);
  CHECK(doc.at("rows")[1].at("cbfs_exceeds_kernel") == true);
  // Counts past 64 bits become decimal strings.
  const auto wide = nlohmann::json::parse(render(compare_table(70, 70), Format::Json));
  CHECK(wide.at("rows")[0].at("bf").is_string());
  CHECK(count_lines(render(compare_table(3, 5), Format::Text)) == 4);
}

TEST_CASE("export verification reports") {
  std::vector<BinaryWord> words{BinaryWord::parse("111001100"), BinaryWord::parse("110011010")};
  const auto report = check_set(WordSet::from_words(words, Provenance::User));
  const auto doc = nlohmann::json::parse(render(report, Format::Json));
  CHECK(doc.at("ok") == false);
  CHECK(doc.at("method") == "trie");
  CHECK(doc.at("checked_pairs") == 4);
  REQUIRE(doc.at("violations").size() == 1);
  CHECK(doc.at("violations")[0].at("a") == "110011010");
  CHECK(doc.at("violations")[0].at("b") == "111001100");
  CHECK(doc.at("violations")[0].at("factor") == "1100");
  CHECK(render(report, Format::Csv) == "a,b,factor\n110011010,111001100,1100\n");
}

TEST_CASE("JSON word sets round-trip") {
  for (std::size_t n = 3; n <= 14; ++n) {
    for (const WordSet& s : {cbfs(n), enumerate_bifix_free(n)}) {
      std::istringstream in(render(s, Format::Json));
      CHECK(read_word_set_json(in) == s);
    }
  }
  std::istringstream bad(R"({"n":3,"provenance":"nope","cardinality":0,"words":[]})");
  CHECK_THROWS_AS(read_word_set_json(bad), Error);
  std::istringstream wrong_count(R"({"n":3,"provenance":"user","cardinality":2,"words":["110"]})");
  CHECK_THROWS_AS(read_word_set_json(wrong_count), Error);
  std::istringstream garbage("not json");
  CHECK_THROWS_AS(read_word_set_json(garbage), Error);
}

TEST_CASE("read_words") {
  std::istringstream in("110\n\n100\n");
  const auto words = read_words(in);
  REQUIRE(words.size() == 2);
  CHECK(words[1].to_string() == "100");
  std::istringstream bad("110\n\n1x0\n");
  try {
    read_words(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("export_to files") {
  const auto path = std::filesystem::temp_directory_path() / "cbf_export_test.txt";
  export_to(path, cbfs(4), Format::Text);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1100");
  std::filesystem::remove(path);
  try {
    export_to("/nonexistent-dir/x.txt", cbfs(4), Format::Text);
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoFailure);
  }
}
