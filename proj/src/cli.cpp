#include "cbf/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cbf/baseline.hpp"
#include "cbf/construction.hpp"
#include "cbf/error.hpp"
#include "cbf/io.hpp"
#include "cbf/verification.hpp"
#include "json.hpp"

namespace cbf::cli {

namespace {

using nlohmann::json;

struct Options {
  std::size_t n = 0;
  std::size_t from = 3;
  std::size_t to = 15;
  unsigned q = 2;
  std::string what = "cbfs";
  std::string format_name = "text";
  std::string method_name = "trie";
  Format format = Format::Text;
  CheckMethod method = CheckMethod::Trie;
  std::size_t cap = kDefaultEnumerationCap;
  double time_limit = 60.0;
  std::string input;
  std::string output;
  std::string gamma;
  bool hat = false;
  std::optional<int> height;
  bool cross_check = false;
};

WordSet load_words(const Options& opt, std::istream& in, Provenance provenance) {
  std::vector<BinaryWord> words;
  if (opt.input.empty() || opt.input == "-") {
    words = read_words(in);
  } else {
    std::ifstream file(opt.input);
    if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + opt.input);
    words = read_words(file);
  }
  return WordSet::from_words(std::move(words), provenance);
}

// Sends `body` to --output or the result stream.
void emit(const Options& opt, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (opt.output.empty() || opt.output == "-") {
    body(out);
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + opt.output);
  body(file);
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "failed writing " + opt.output);
}

void emit_json(const Options& opt, std::ostream& out, const json& doc) {
  emit(opt, out, [&](std::ostream& o) { o << doc.dump() << '\n'; });
}

json witness_json(const ConflictWitness& w) {
  return json{{"a", w.word_a.to_string()},
              {"b", w.word_b.to_string()},
              {"factor", w.factor.bits.to_string()}};
}

int do_construct(const Options& opt, std::ostream& out) {
  const WordSet s = cbfs(opt.n);
  emit(opt, out, [&](std::ostream& o) { write(o, s, opt.format); });
  return kExitOk;
}

int do_count(const Options& opt, std::ostream& out) {
  BigInt value;
  if (opt.what == "cbfs") {
    value = cbfs_cardinality(opt.n);
  } else if (opt.what == "bf") {
    value = bifix_free_count(opt.q, opt.n);
  } else {
    value = kernel_cardinality(opt.n);
  }
  if (opt.format == Format::Json) {
    json doc{{"n", opt.n}, {"what", opt.what}, {"count", value.str()}};
    if (opt.what == "bf") doc["q"] = opt.q;
    emit_json(opt, out, doc);
  } else {
    emit(opt, out, [&](std::ostream& o) { o << value.str() << '\n'; });
  }
  return kExitOk;
}

int do_enumerate(const Options& opt, std::ostream& out) {
  const WordSet s = (opt.hat || opt.height) ? enumerate_hat_bf(opt.n, opt.height, opt.cap)
                                            : enumerate_bifix_free(opt.n, opt.cap);
  emit(opt, out, [&](std::ostream& o) { write(o, s, opt.format); });
  return kExitOk;
}

int do_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const WordSet s = load_words(opt, in, Provenance::User);
  const VerificationReport report = check_set(s, opt.method);
  emit(opt, out, [&](std::ostream& o) { write(o, report, opt.format); });
  return report.ok ? kExitOk : kExitCheckFailed;
}

int do_nonexpandable(const Options& opt, std::istream& in, std::ostream& out) {
  const WordSet s = opt.input.empty() ? cbfs(opt.n) : load_words(opt, in, Provenance::User);
  const std::size_t n = opt.input.empty() ? opt.n : s.n();
  const NonExpandability result = is_non_expandable(s, n, opt.cap);
  if (opt.format == Format::Json) {
    emit_json(opt, out,
              json{{"n", n},
                   {"cardinality", s.size()},
                   {"non_expandable", result.non_expandable},
                   {"expanding_word", result.expanding_word ? json(result.expanding_word->to_string())
                                                            : json(nullptr)},
                   {"candidates_checked", result.candidates_checked}});
  } else {
    emit(opt, out, [&](std::ostream& o) {
      if (result.non_expandable) {
        o << "non-expandable n=" << n << " candidates=" << result.candidates_checked << '\n';
      } else {
        o << "expandable by " << result.expanding_word->to_string() << '\n';
      }
    });
  }
  return result.non_expandable ? kExitOk : kExitCheckFailed;
}

int do_witness(const Options& opt, std::istream& in, std::ostream& out) {
  const BinaryWord gamma = BinaryWord::parse(opt.gamma);
  const WordSet s = opt.input.empty() ? cbfs(gamma.size()) : load_words(opt, in, Provenance::User);
  try {
    const ConflictWitness w = expansion_blocker(gamma, s);
    if (opt.format == Format::Json) {
      emit_json(opt, out, witness_json(w));
    } else {
      emit(opt, out, [&](std::ostream& o) {
        o << w.word_a.to_string() << ' ' << w.word_b.to_string() << ' '
          << w.factor.bits.to_string() << '\n';
      });
    }
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoBlocker) throw;
    if (opt.format == Format::Json) {
      emit_json(opt, out, json{{"blocker", nullptr}, {"gamma", gamma.to_string()}});
    } else {
      emit(opt, out, [&](std::ostream& o) { o << "no blocker for " << gamma.to_string() << '\n'; });
    }
    return kExitCheckFailed;
  }
}

int do_maxset(const Options& opt, std::ostream& out) {
  const MaxSetResult result =
      max_set_search(opt.n, std::chrono::duration<double>(opt.time_limit), opt.cap);
  const std::optional<BigInt> reference =
      opt.n >= 3 ? std::optional<BigInt>(cbfs_cardinality(opt.n)) : std::nullopt;
  const bool exceeds = reference && BigInt(result.best.size()) > *reference;
  if (opt.format == Format::Json) {
    json words = json::array();
    for (const auto& w : result.best) words.push_back(w.to_string());
    emit_json(opt, out,
              json{{"n", opt.n},
                   {"cardinality", result.best.size()},
                   {"optimal", result.optimal},
                   {"nodes", result.nodes},
                   {"cbfs_cardinality", reference ? json(reference->str()) : json(nullptr)},
                   {"exceeds_cbfs", exceeds},
                   {"words", std::move(words)}});
  } else {
    emit(opt, out, [&](std::ostream& o) {
      o << "cardinality=" << result.best.size() << " optimal=" << (result.optimal ? "yes" : "no")
        << " cbfs=" << (reference ? reference->str() : std::string("n/a"))
        << " exceeds_cbfs=" << (exceeds ? "yes" : "no") << " nodes=" << result.nodes << '\n';
      for (const auto& w : result.best) o << w.to_string() << '\n';
    });
  }
  return kExitOk;
}

int do_compare(const Options& opt, std::ostream& out) {
  const CardinalityTable table = compare_table(opt.from, opt.to, opt.cross_check, opt.cap);
  emit(opt, out, [&](std::ostream& o) { write(o, table, opt.format); });
  return kExitOk;
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format_name, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("--output", opt.output, "Write results to this file instead of stdout");
}

void add_cap(CLI::App* cmd, Options& opt) {
  cmd->add_option("--cap", opt.cap, "Enumeration length cap")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-bifix-free binary word sets from Dyck-path constructions", "cbf"};
  app.require_subcommand(1, 1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "Build CBFS_2(n)");
  construct->add_option("--n", opt.n, "Word length (>= 3)")->required();
  add_format(construct, opt);
  add_output(construct, opt);

  auto* count = app.add_subcommand("count", "Cardinalities without enumeration");
  count->add_option("--n", opt.n, "Word length")->required();
  count->add_option("--what", opt.what, "cbfs, bf or kernel")
      ->check(CLI::IsMember({"cbfs", "bf", "kernel"}))
      ->capture_default_str();
  count->add_option("--q", opt.q, "Alphabet size for --what bf")->capture_default_str();
  add_format(count, opt);
  add_output(count, opt);

  auto* enumerate = app.add_subcommand("enumerate", "List BF_2(n)");
  enumerate->add_option("--n", opt.n, "Word length")->required();
  enumerate->add_flag("--hat", opt.hat, "Only words starting with 1 and ending with 0");
  enumerate->add_option("--height", opt.height, "End height filter (implies --hat)");
  add_cap(enumerate, opt);
  add_format(enumerate, opt);
  add_output(enumerate, opt);

  auto* verify = app.add_subcommand("verify", "Check that a word list is cross-bifix-free");
  verify->add_option("--input", opt.input, "Word file (default stdin)");
  verify->add_option("--method", opt.method_name, "naive or trie")
      ->check(CLI::IsMember({"naive", "trie"}))
      ->capture_default_str();
  add_format(verify, opt);
  add_output(verify, opt);

  auto* nonexp = app.add_subcommand("nonexpandable", "Exhaustive non-expandability check");
  nonexp->add_option("--n", opt.n, "Check CBFS_2(n)");
  nonexp->add_option("--input", opt.input, "Check this word file instead ('-' for stdin)");
  add_cap(nonexp, opt);
  add_format(nonexp, opt);
  add_output(nonexp, opt);

  auto* witness = app.add_subcommand("witness", "Find a member conflicting with a word");
  witness->add_option("--gamma", opt.gamma, "Candidate word")->required();
  witness->add_option("--input", opt.input, "Word file (default CBFS_2(|gamma|))");
  add_format(witness, opt);
  add_output(witness, opt);

  auto* maxset = app.add_subcommand("maxset", "Exact maximum cross-bifix-free subset of BF_2(n)");
  maxset->add_option("--n", opt.n, "Word length")->required();
  maxset->add_option("--time-limit", opt.time_limit, "Seconds before returning the best found")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_cap(maxset, opt);
  add_format(maxset, opt);
  add_output(maxset, opt);

  auto* compare = app.add_subcommand("compare", "Cardinality table against the kernel baseline");
  compare->add_option("--from", opt.from, "First length")->capture_default_str();
  compare->add_option("--to", opt.to, "Last length")->capture_default_str();
  compare->add_flag("--cross-check", opt.cross_check, "Confirm each row by enumeration");
  add_cap(compare, opt);
  add_format(compare, opt);
  add_output(compare, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  opt.format = format_from_string(opt.format_name);
  opt.method = check_method_from_string(opt.method_name);

  try {
    if (*construct) return do_construct(opt, out);
    if (*count) return do_count(opt, out);
    if (*enumerate) return do_enumerate(opt, out);
    if (*verify) return do_verify(opt, in, out);
    if (*nonexp) {
      if (opt.input.empty() && opt.n == 0) {
        err << "nonexpandable: give --n or --input\n";
        return kExitUsage;
      }
      return do_nonexpandable(opt, in, out);
    }
    if (*witness) return do_witness(opt, in, out);
    if (*maxset) return do_maxset(opt, out);
    if (*compare) return do_compare(opt, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cbf::cli
