#pragma once

// Run-length view of q-ary sequences: the bijection between a sequence and
// its (composition, run-length vector) pair, plus the text forms used by the
// CLI and file formats.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stickyinsdel/errors.hpp"

namespace stickyinsdel {

using Symbol = std::uint32_t;
using RunLength = std::int64_t;

// Non-empty word over the alphabet {0, ..., alphabet_size-1}.
class Sequence {
 public:
  Sequence(std::vector<Symbol> symbols, std::uint32_t alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (symbols_.empty()) {
      throw InvalidInput("sequence must be non-empty");
    }
    if (alphabet_size_ < 2) {
      throw InvalidInput("alphabet size must be at least 2");
    }
    for (Symbol s : symbols_) {
      if (s >= alphabet_size_) {
        throw InvalidInput("symbol " + std::to_string(s) +
                           " outside alphabet of size " +
                           std::to_string(alphabet_size_));
      }
    }
  }

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Sequence& a, const Sequence& b) {
    return !(a == b);
  }
  friend bool operator<(const Sequence& a, const Sequence& b) {
    if (a.alphabet_size_ != b.alphabet_size_) {
      return a.alphabet_size_ < b.alphabet_size_;
    }
    return a.symbols_ < b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::uint32_t alphabet_size_;
};

// The distinct run symbols c_1...c_r, adjacent letters unequal. Carries the
// alphabet size so that decoding restores the exact sequence type.
class Composition {
 public:
  Composition(std::vector<Symbol> letters, std::uint32_t alphabet_size)
      : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    if (letters_.empty()) {
      throw InvalidInput("composition must be non-empty");
    }
    if (alphabet_size_ < 2) {
      throw InvalidInput("alphabet size must be at least 2");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] >= alphabet_size_) {
        throw InvalidInput("composition letter outside alphabet");
      }
      if (i > 0 && letters_[i] == letters_[i - 1]) {
        throw InvalidInput("composition has equal adjacent letters");
      }
    }
  }

  const std::vector<Symbol>& letters() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) {
    return !(a == b);
  }

 private:
  std::vector<Symbol> letters_;
  std::uint32_t alphabet_size_;
};

// Tuple of positive run lengths u_1...u_r.
class RunLengthVector {
 public:
  explicit RunLengthVector(std::vector<RunLength> lengths)
      : lengths_(std::move(lengths)) {
    if (lengths_.empty()) {
      throw InvalidInput("run-length vector must be non-empty");
    }
    for (RunLength v : lengths_) {
      if (v < 1) {
        throw InvalidInput("run lengths must be positive");
      }
    }
  }

  const std::vector<RunLength>& values() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  RunLength operator[](std::size_t i) const { return lengths_[i]; }

  RunLength total() const {
    RunLength sum = 0;
    for (RunLength v : lengths_) sum += v;
    return sum;
  }

  friend bool operator==(const RunLengthVector& a, const RunLengthVector& b) {
    return a.lengths_ == b.lengths_;
  }
  friend bool operator!=(const RunLengthVector& a, const RunLengthVector& b) {
    return !(a == b);
  }
  friend bool operator<(const RunLengthVector& a, const RunLengthVector& b) {
    return a.lengths_ < b.lengths_;
  }

 private:
  std::vector<RunLength> lengths_;
};

// Image of a sequence under the run-length map: composition plus lengths,
// one entry per maximal run.
class RunProfile {
 public:
  RunProfile(Composition composition, RunLengthVector lengths)
      : composition_(std::move(composition)), lengths_(std::move(lengths)) {
    if (composition_.size() != lengths_.size()) {
      throw InvalidInput("composition and run-length vector sizes differ");
    }
  }

  const Composition& composition() const { return composition_; }
  const RunLengthVector& lengths() const { return lengths_; }
  std::size_t run_count() const { return lengths_.size(); }

  friend bool operator==(const RunProfile& a, const RunProfile& b) {
    return a.composition_ == b.composition_ && a.lengths_ == b.lengths_;
  }
  friend bool operator!=(const RunProfile& a, const RunProfile& b) {
    return !(a == b);
  }

 private:
  Composition composition_;
  RunLengthVector lengths_;
};

// Sequence -> (composition, run lengths). Inverse of decode.
inline RunProfile encode(const Sequence& x) {
  std::vector<Symbol> letters;
  std::vector<RunLength> lengths;
  const auto& sym = x.symbols();
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (i == 0 || sym[i] != sym[i - 1]) {
      letters.push_back(sym[i]);
      lengths.push_back(1);
    } else {
      ++lengths.back();
    }
  }
  return RunProfile(Composition(std::move(letters), x.alphabet_size()),
                    RunLengthVector(std::move(lengths)));
}

inline Sequence decode(const Composition& composition,
                       const RunLengthVector& lengths) {
  if (composition.size() != lengths.size()) {
    throw InvalidInput("composition and run-length vector sizes differ");
  }
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(lengths.total()));
  for (std::size_t i = 0; i < composition.size(); ++i) {
    symbols.insert(symbols.end(), static_cast<std::size_t>(lengths[i]),
                   composition.letters()[i]);
  }
  return Sequence(std::move(symbols), composition.alphabet_size());
}

inline Sequence decode(const RunProfile& profile) {
  return decode(profile.composition(), profile.lengths());
}

inline std::size_t run_count(const Sequence& x) {
  std::size_t runs = 1;
  const auto& sym = x.symbols();
  for (std::size_t i = 1; i < sym.size(); ++i) {
    if (sym[i] != sym[i - 1]) ++runs;
  }
  return runs;
}

namespace detail {

inline std::string_view trim(std::string_view text) {
  while (!text.empty() &&
         (text.front() == ' ' || text.front() == '\t' || text.front() == '\r' ||
          text.front() == '\n')) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' ||
          text.back() == '\n')) {
    text.remove_suffix(1);
  }
  return text;
}

inline Symbol parse_symbol(std::string_view token) {
  token = trim(token);
  Symbol value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InvalidInput("bad symbol token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

// Parses either text form: a compact digit string ("00311120") or
// comma-separated integers ("0,0,3,1,1,1,2,0"). When alphabet_size is zero
// it is inferred as max(symbol)+1, at least 2.
inline Sequence parse_sequence(std::string_view text,
                               std::uint32_t alphabet_size = 0) {
  text = detail::trim(text);
  if (text.empty()) {
    throw InvalidInput("empty sequence text");
  }
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view token = comma == std::string_view::npos
                                   ? text.substr(start)
                                   : text.substr(start, comma - start);
      symbols.push_back(detail::parse_symbol(token));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidInput("unexpected character '" + std::string(1, c) +
                           "' in sequence text");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  if (alphabet_size == 0) {
    Symbol max_symbol = *std::max_element(symbols.begin(), symbols.end());
    alphabet_size = std::max<std::uint32_t>(2, max_symbol + 1);
  }
  return Sequence(std::move(symbols), alphabet_size);
}

// Compact digit string when the alphabet fits in one digit per symbol,
// comma-separated integers otherwise.
inline std::string to_text(const Sequence& x) {
  std::string out;
  if (x.alphabet_size() <= 10) {
    out.reserve(x.size());
    for (Symbol s : x.symbols()) {
      out.push_back(static_cast<char>('0' + s));
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(x.symbols()[i]);
    }
  }
  return out;
}

}  // namespace stickyinsdel
