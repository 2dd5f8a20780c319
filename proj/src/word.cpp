#include "hieroglyph/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace hieroglyph {

namespace {

constexpr Letter kNoLetter = std::numeric_limits<Letter>::max();

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Checks the double-occurrence property of a word over letters 0..n-1.
void validate(const std::vector<Letter>& symbols) {
  if (symbols.size() % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                "word has odd length " + std::to_string(symbols.size()));
  }
  const std::size_t n = symbols.size() / 2;
  std::vector<std::uint8_t> count(n, 0);
  for (Letter x : symbols) {
    if (x >= n) {
      throw Error(ErrorCode::BadMultiplicity,
                  "letter " + std::to_string(x) + " is out of range for a word with " +
                      std::to_string(n) + " loops");
    }
    if (++count[x] > 2) {
      throw Error(ErrorCode::BadMultiplicity,
                  "letter " + std::to_string(x) + " occurs more than twice");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (count[x] != 2) {
      throw Error(ErrorCode::BadMultiplicity,
                  "letter " + std::to_string(x) + " occurs " + std::to_string(count[x]) +
                      " time(s), expected 2");
    }
  }
}

// Writes the first-occurrence relabeling of the cyclic reading of `src`
// starting at `start` (backwards when `backward`) into `out`, aborting as soon
// as the result is known to exceed `best`. Returns true when out < best.
bool relabel_less(const std::vector<Letter>& src, std::size_t start, bool backward,
                  const std::vector<Letter>& best, std::vector<Letter>& out,
                  std::vector<Letter>& map) {
  const std::size_t m = src.size();
  std::fill(map.begin(), map.end(), kNoLetter);
  Letter next = 0;
  bool less = best.empty();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t p = backward ? (start + m - i) % m : (start + i) % m;
    Letter& image = map[src[p]];
    if (image == kNoLetter) image = next++;
    out[i] = image;
    if (!less) {
      if (out[i] > best[i]) return false;
      if (out[i] < best[i]) less = true;
    }
  }
  return less;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

Word Word::from_symbols(std::vector<Letter> symbols) {
  validate(symbols);
  return Word(std::move(symbols));
}

Word Word::normalized() const {
  std::vector<Letter> map(loops(), kNoLetter);
  std::vector<Letter> out(size());
  Letter next = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    Letter& image = map[symbols_[i]];
    if (image == kNoLetter) image = next++;
    out[i] = image;
  }
  return Word(std::move(out));
}

Word Word::rotated(std::size_t shift) const {
  if (empty()) return *this;
  std::vector<Letter> out(symbols_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % size()), out.end());
  return Word(std::move(out));
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(symbols_.rbegin(), symbols_.rend()));
}

Word Word::relabeled(std::span<const Letter> mapping) const {
  if (mapping.size() != loops()) {
    throw std::invalid_argument("relabeling size does not match loop count");
  }
  std::vector<Letter> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = mapping[symbols_[i]];
  return from_symbols(std::move(out));
}

Word parse_word(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  const std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) return Word();

  const bool letters = std::all_of(body.begin(), body.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
  std::vector<std::uint64_t> raw;
  if (letters) {
    for (char c : body) raw.push_back(static_cast<std::uint64_t>(c - 'a'));
  } else {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      std::size_t tb = pos;
      std::size_t te = comma;
      while (tb < te && is_space(body[tb])) ++tb;
      while (te > tb && is_space(body[te - 1])) --te;
      const std::string_view token = body.substr(tb, te - tb);
      const std::size_t column = begin + tb + 1;
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::BadToken,
                    "bad token '" + std::string(token) + "' at column " + std::to_string(column),
                    column);
      }
      raw.push_back(value);
      pos = comma + 1;
    }
  }

  if (raw.size() % 2 != 0) {
    throw Error(ErrorCode::OddLength, "word has odd length " + std::to_string(raw.size()));
  }
  std::unordered_map<std::uint64_t, Letter> ids;
  std::vector<Letter> symbols;
  symbols.reserve(raw.size());
  for (std::uint64_t v : raw) {
    auto [it, inserted] = ids.try_emplace(v, static_cast<Letter>(ids.size()));
    symbols.push_back(it->second);
  }
  std::vector<std::size_t> count(ids.size(), 0);
  for (Letter x : symbols) ++count[x];
  for (const auto& [token, id] : ids) {
    if (count[id] != 2) {
      const std::string name =
          letters ? std::string(1, static_cast<char>('a' + token)) : std::to_string(token);
      throw Error(ErrorCode::BadMultiplicity,
                  "token '" + name + "' occurs " + std::to_string(count[id]) +
                      " time(s), expected 2");
    }
  }
  return Word::from_symbols(std::move(symbols));
}

std::string format_word(const Word& w) {
  std::string out;
  if (w.loops() <= 26) {
    for (Letter x : w.symbols()) out.push_back(static_cast<char>('a' + x));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

PositionPairing to_pairing(const Word& w) {
  std::vector<Position> first(w.loops(), w.size());
  PositionPairing partner(w.size());
  for (Position p = 0; p < w.size(); ++p) {
    Position& f = first[w[p]];
    if (f == w.size()) {
      f = p;
    } else {
      partner[p] = f;
      partner[f] = p;
    }
  }
  return partner;
}

Word restrict_letters(const Word& w, std::span<const Letter> keep) {
  std::vector<bool> kept(w.loops(), false);
  for (Letter x : keep) {
    if (x >= w.loops()) {
      throw Error(ErrorCode::UnknownLetter,
                  "letter " + std::to_string(x) + " does not occur in the word");
    }
    kept[x] = true;
  }
  std::vector<Letter> sub;
  sub.reserve(2 * keep.size());
  for (Letter x : w.symbols()) {
    if (kept[x]) sub.push_back(x);
  }
  std::vector<Letter> map(w.loops(), kNoLetter);
  Letter next = 0;
  for (Letter& x : sub) {
    if (map[x] == kNoLetter) map[x] = next++;
    x = map[x];
  }
  return Word::from_symbols(std::move(sub));
}

CanonicalForm canonical_form(const Word& w, bool include_reflection) {
  const std::vector<Letter>& src = w.symbols();
  std::vector<Letter> best;
  std::vector<Letter> candidate(src.size());
  std::vector<Letter> map(w.loops());
  for (int dir = 0; dir < (include_reflection ? 2 : 1); ++dir) {
    for (std::size_t start = 0; start < src.size(); ++start) {
      if (relabel_less(src, start, dir == 1, best, candidate, map)) best = candidate;
    }
  }
  return CanonicalForm{Word::from_symbols(std::move(best)), include_reflection};
}

bool equivalent(const Word& a, const Word& b, bool include_reflection) {
  if (a.size() != b.size()) return false;
  return canonical_form(a, include_reflection).word == canonical_form(b, include_reflection).word;
}

DiagramStream::DiagramStream(std::size_t n, bool dedupe, std::size_t max_n)
    : n_(n), dedupe_(dedupe), slots_(2 * n, kNoLetter) {
  if (n > max_n) {
    throw Error(ErrorCode::BoundExceeded, "loop count " + std::to_string(n) +
                                              " exceeds the enumeration bound " +
                                              std::to_string(max_n));
  }
}

DiagramStream::DiagramStream(std::size_t n, Position first_partner, bool dedupe,
                             std::size_t max_n)
    : DiagramStream(n, dedupe, max_n) {
  if (first_partner == 0 || first_partner >= 2 * n) {
    throw std::invalid_argument("first partner must lie in 1..2n-1");
  }
  pinned_partner_ = first_partner;
}

bool DiagramStream::descend_from(std::size_t depth) {
  frames_.resize(depth);
  for (std::size_t d = depth; d < n_; ++d) {
    Position open = 0;
    while (slots_[open] != kNoLetter) ++open;
    Position partner = open + 1;
    if (d == 0 && pinned_partner_) {
      partner = *pinned_partner_;
    } else {
      while (slots_[partner] != kNoLetter) ++partner;
    }
    slots_[open] = slots_[partner] = static_cast<Letter>(d);
    frames_.emplace_back(open, partner);
  }
  return true;
}

bool DiagramStream::advance() {
  for (std::size_t d = n_; d-- > 0;) {
    auto [open, partner] = frames_[d];
    slots_[open] = slots_[partner] = kNoLetter;
    if (d == 0 && pinned_partner_) return false;
    Position candidate = partner + 1;
    while (candidate < slots_.size() && slots_[candidate] != kNoLetter) ++candidate;
    if (candidate < slots_.size()) {
      slots_[open] = slots_[candidate] = static_cast<Letter>(d);
      frames_.resize(d);
      frames_.emplace_back(open, candidate);
      return descend_from(d + 1);
    }
  }
  return false;
}

std::optional<Word> DiagramStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      descend_from(0);
    } else if (!advance()) {
      done_ = true;
      break;
    }
    Word w = Word::from_symbols(slots_);
    if (dedupe_ && canonical_form(w, true).word != w) continue;
    return w;
  }
  return std::nullopt;
}

std::vector<Word> enumerate_diagrams(std::size_t n, bool dedupe, std::size_t max_n) {
  DiagramStream stream(n, dedupe, max_n);
  std::vector<Word> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::uint64_t matching_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t k = 3; k < 2 * n; k += 2) count *= k;
  return count;
}

Word random_word(std::size_t n, std::mt19937_64& rng) {
  std::vector<Position> order(2 * n);
  std::iota(order.begin(), order.end(), Position{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Letter> symbols(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols[order[2 * i]] = symbols[order[2 * i + 1]] = static_cast<Letter>(i);
  }
  return Word::from_symbols(std::move(symbols)).normalized();
}

}  // namespace hieroglyph
