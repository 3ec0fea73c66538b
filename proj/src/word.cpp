#include "cbf/word.hpp"

#include <algorithm>

#include "cbf/error.hpp"

namespace cbf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ImpossibleHeight: return "ImpossibleHeight";
    case ErrorCode::UnsupportedLength: return "UnsupportedLength";
    case ErrorCode::MixedLengths: return "MixedLengths";
    case ErrorCode::NoBlocker: return "NoBlocker";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

BinaryWord::BinaryWord(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {
  if (length == 0 || length > kMaxLength) {
    throw Error(ErrorCode::InvalidArgument,
                "word length must be in 1..64, got " + std::to_string(length));
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "bits exceed word length " + std::to_string(length));
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty word");
  if (text.size() > kMaxLength) {
    throw Error(ErrorCode::ParseError, "word longer than 64 symbols");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::ParseError,
                  "invalid symbol '" + std::string(1, c) + "' at column " + std::to_string(i + 1));
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BinaryWord(bits, text.size());
}

unsigned BinaryWord::at(std::size_t i) const {
  if (i >= length_) throw Error(ErrorCode::InvalidArgument, "symbol index out of range");
  return static_cast<unsigned>((bits_ >> (length_ - 1 - i)) & 1U);
}

std::size_t BinaryWord::count(unsigned symbol) const {
  const auto ones = static_cast<std::size_t>(__builtin_popcountll(bits_));
  return symbol != 0 ? ones : length_ - ones;
}

BinaryWord BinaryWord::prefix(std::size_t k) const {
  if (k == 0 || k > length_) throw Error(ErrorCode::InvalidArgument, "prefix length out of range");
  return BinaryWord(bits_ >> (length_ - k), k);
}

BinaryWord BinaryWord::suffix(std::size_t k) const {
  if (k == 0 || k > length_) throw Error(ErrorCode::InvalidArgument, "suffix length out of range");
  return BinaryWord(bits_ & low_mask(k), k);
}

BinaryWord BinaryWord::complement() const noexcept {
  return BinaryWord(~bits_ & low_mask(length_), length_);
}

std::string BinaryWord::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((bits_ >> (length_ - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t common = std::min(a.length_, b.length_);
  const std::uint64_t pa = a.bits_ >> (a.length_ - common);
  const std::uint64_t pb = b.bits_ >> (b.length_ - common);
  if (pa != pb) return pa <=> pb;
  return a.length_ <=> b.length_;
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t n = a.size() + b.size();
  if (n > BinaryWord::kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "concatenation longer than 64 symbols");
  }
  return BinaryWord((a.bits() << b.size()) | b.bits(), n);
}

std::string_view to_string(FactorRole role) {
  switch (role) {
    case FactorRole::Prefix: return "prefix";
    case FactorRole::Suffix: return "suffix";
    case FactorRole::Bifix: return "bifix";
    case FactorRole::CrossBifix: return "cross_bifix";
  }
  return "unknown";
}

int LatticePath::end_height() const noexcept {
  int h = 0;
  for (Step s : steps_) h += s == Step::Rise ? 1 : -1;
  return h;
}

int LatticePath::min_height() const noexcept {
  int h = 0;
  int lowest = 0;
  for (Step s : steps_) {
    h += s == Step::Rise ? 1 : -1;
    lowest = std::min(lowest, h);
  }
  return lowest;
}

bool is_bifix_free(const BinaryWord& w) {
  return bifixes(w).empty();
}

std::vector<Factor> bifixes(const BinaryWord& w) {
  const std::size_t n = w.size();
  // border[i] = length of the longest strict border of the first i symbols.
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w.at(i) != w.at(k)) k = border[k];
    if (w.at(i) == w.at(k)) ++k;
    border[i + 1] = k;
  }
  std::vector<Factor> out;
  for (std::size_t b = border[n]; b > 0; b = border[b]) {
    out.push_back(Factor{w.prefix(b), FactorRole::Bifix});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Factor> cross_bifixes(const BinaryWord& w, const BinaryWord& v) {
  if (w.size() != v.size()) {
    throw Error(ErrorCode::LengthMismatch, "cross_bifixes needs equal-length words");
  }
  if (w == v) return bifixes(w);
  std::vector<Factor> out;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const BinaryWord wp = w.prefix(k);
    const BinaryWord vp = v.prefix(k);
    const bool w_then_v = wp == v.suffix(k);
    const bool v_then_w = vp == w.suffix(k);
    if (w_then_v) out.push_back(Factor{wp, FactorRole::CrossBifix});
    if (v_then_w && !(w_then_v && vp == wp)) out.push_back(Factor{vp, FactorRole::CrossBifix});
  }
  // Already grouped by length; two factors of one length may be out of order.
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.bits.size() != b.bits.size()) return a.bits.size() < b.bits.size();
    return a.bits.bits() < b.bits.bits();
  });
  return out;
}

LatticePath word_to_path(const BinaryWord& w) {
  std::vector<Step> steps;
  steps.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) steps.push_back(w.at(i) != 0 ? Step::Rise : Step::Fall);
  return LatticePath(std::move(steps));
}

BinaryWord path_to_word(const LatticePath& p) {
  if (p.empty() || p.size() > BinaryWord::kMaxLength) {
    throw Error(ErrorCode::InvalidArgument, "path must have 1..64 steps");
  }
  std::uint64_t bits = 0;
  for (Step s : p.steps()) bits = (bits << 1) | (s == Step::Rise ? 1U : 0U);
  return BinaryWord(bits, p.size());
}

}  // namespace cbf
