#include "cbf/word_set.hpp"

#include <algorithm>
#include <string>

#include "cbf/error.hpp"

namespace cbf {

namespace {

struct ProvenanceName {
  Provenance value;
  std::string_view name;
};

constexpr ProvenanceName kProvenanceNames[] = {
    {Provenance::CbfsOdd, "cbfs_odd"},
    {Provenance::CbfsEvenMEven, "cbfs_even_m_even"},
    {Provenance::CbfsEvenMOdd, "cbfs_even_m_odd"},
    {Provenance::Exclusion, "exclusion"},
    {Provenance::User, "user"},
    {Provenance::Enumeration, "enumeration"},
    {Provenance::MaxSetSearch, "max_set_search"},
};

}  // namespace

std::string_view to_string(Provenance p) {
  for (const auto& entry : kProvenanceNames) {
    if (entry.value == p) return entry.name;
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view name) {
  for (const auto& entry : kProvenanceNames) {
    if (entry.name == name) return entry.value;
  }
  throw Error(ErrorCode::ParseError, "unknown provenance '" + std::string(name) + "'");
}

WordSet::WordSet(std::size_t n, std::vector<BinaryWord> words, Provenance provenance)
    : n_(n), words_(std::move(words)), provenance_(provenance) {
  if (n == 0 || n > BinaryWord::kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "word set length must be in 1..64");
  }
  for (const auto& w : words_) {
    if (w.size() != n_) {
      throw Error(ErrorCode::MixedLengths, "word " + w.to_string() + " has length " +
                                               std::to_string(w.size()) + ", expected " +
                                               std::to_string(n_));
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

WordSet WordSet::from_words(std::vector<BinaryWord> words, Provenance provenance) {
  if (words.empty()) throw Error(ErrorCode::InvalidArgument, "empty word list");
  const std::size_t n = words.front().size();
  return WordSet(n, std::move(words), provenance);
}

bool WordSet::contains(const BinaryWord& w) const {
  return w.size() == n_ && std::binary_search(words_.begin(), words_.end(), w);
}

WordSet WordSet::with(const BinaryWord& w) const {
  auto words = words_;
  words.push_back(w);
  return WordSet(n_, std::move(words), Provenance::User);
}

WordSet WordSet::without(const BinaryWord& w) const {
  auto words = words_;
  std::erase(words, w);
  return WordSet(n_, std::move(words), Provenance::User);
}

}  // namespace cbf
