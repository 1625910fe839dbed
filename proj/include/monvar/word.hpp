#ifndef MONVAR_WORD_HPP_
#define MONVAR_WORD_HPP_

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monvar/letter.hpp"

namespace monvar {

/// An element of the free monoid F^1: a finite sequence of letters.
/// The empty sequence is the identity element (the empty word).
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  auto operator<=>(const Word&) const = default;

  Word& operator+=(const Word& rhs) {
    letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
    return *this;
  }
  Word& operator+=(const Letter& l) {
    letters.push_back(l);
    return *this;
  }
};

inline Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
inline Word operator+(Word lhs, const Letter& rhs) { return lhs += rhs; }

/// An ordered pair of words, read as the equation lhs ≈ rhs.
struct Identity {
  Word lhs;
  Word rhs;
  std::string name;

  Identity() = default;
  Identity(Word l, Word r, std::string n = "")
      : lhs(std::move(l)), rhs(std::move(r)), name(std::move(n)) {}

  bool trivial() const { return lhs == rhs; }
};

/// Thrown by parse_word / parse_identity; position is a 0-based offset into
/// the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline int parse_uint(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected digit", pos);
  long v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1000000) throw ParseError("index too large", pos);
    ++pos;
  }
  return static_cast<int>(v);
}

// Parses one whitespace-delimited token starting at `pos` (absolute offsets
// into the whole input, for error reporting). A token without brackets,
// underscores or carets is "compact": each character is its own letter.
inline void parse_token(std::string_view text, std::size_t begin, std::size_t end,
                        std::vector<Letter>& out) {
  std::string_view tok = text.substr(begin, end - begin);
  bool structured = tok.find_first_of("[_^") != std::string_view::npos;
  if (!structured) {
    for (std::size_t i = 0; i < tok.size(); ++i) {
      char c = tok[i];
      if (!std::islower(static_cast<unsigned char>(c)))
        throw ParseError("expected lowercase letter", begin + i);
      out.emplace_back(std::string(1, c));
    }
    return;
  }
  std::size_t pos = begin;
  std::string base;
  while (pos < end && std::islower(static_cast<unsigned char>(text[pos])))
    base += text[pos++];
  if (base.empty()) throw ParseError("expected letter name", pos);
  Letter l(base);
  if (pos < end && text[pos] == '[') {
    ++pos;
    l.sub.push_back(parse_uint(text, pos));
    while (pos < end && text[pos] == ',') {
      ++pos;
      l.sub.push_back(parse_uint(text, pos));
    }
    if (pos >= end || text[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
  }
  if (pos < end && text[pos] == '_') {
    if (!l.sub.empty()) throw ParseError("duplicate subscript", pos);
    ++pos;
    l.sub.push_back(parse_uint(text, pos));
  }
  if (pos < end && text[pos] == '^') {
    ++pos;
    l.sup = parse_uint(text, pos);
  }
  if (pos != end) throw ParseError("unexpected character", pos);
  out.push_back(std::move(l));
}

}  // namespace detail

/// Grammar: word := token (ws token)*. A marker-free token is compact
/// ("abcd" is four letters); '_k' is sugar for '[k]'. Empty input is the
/// empty word.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    detail::parse_token(text, pos, end, w.letters);
    pos = end;
  }
  return w;
}

/// Canonical text form. All-plain single-character words print compactly;
/// anything structured prints as space-separated tokens.
inline std::string format_word(const Word& w) {
  bool plain = std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) {
    return l.sub.empty() && !l.sup && l.base.size() == 1;
  });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!plain && i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

/// Parses "lhs = rhs", optionally prefixed with "name:". Either side may be
/// empty (the empty word).
inline Identity parse_identity(std::string_view text) {
  std::string name;
  std::size_t colon = text.find(':');
  std::size_t eq = text.find('=');
  if (colon != std::string_view::npos && (eq == std::string_view::npos || colon < eq)) {
    name = std::string(text.substr(0, colon));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    text = text.substr(colon + 1);
    eq = text.find('=');
  }
  if (eq == std::string_view::npos) throw ParseError("expected '='", text.size());
  return Identity(parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1)),
                  std::move(name));
}

inline std::string format_identity(const Identity& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

inline std::set<Letter> content(const Word& w) {
  return {w.letters.begin(), w.letters.end()};
}

inline std::map<Letter, int> occurrence_counts(const Word& w) {
  std::map<Letter, int> c;
  for (const Letter& l : w.letters) ++c[l];
  return c;
}

inline std::set<Letter> simple_letters(const Word& w) {
  std::set<Letter> out;
  for (auto& [l, n] : occurrence_counts(w))
    if (n == 1) out.insert(l);
  return out;
}

inline std::set<Letter> multiple_letters(const Word& w) {
  std::set<Letter> out;
  for (auto& [l, n] : occurrence_counts(w))
    if (n >= 2) out.insert(l);
  return out;
}

/// The subsequence of w consisting of occurrences of the kept letters.
inline Word restrict(const Word& w, const std::set<Letter>& keep) {
  Word out;
  for (const Letter& l : w.letters)
    if (keep.count(l)) out += l;
  return out;
}

inline Word reverse(const Word& w) {
  Word out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

/// An endomorphism of F^1 given by letter images. Unmapped letters either map
/// to themselves (the default) or to the empty word, depending on the
/// catch-all mode.
struct Substitution {
  std::map<Letter, Word> mapping;
  bool erase_unmapped = false;

  Word image(const Letter& l) const {
    auto it = mapping.find(l);
    if (it != mapping.end()) return it->second;
    if (erase_unmapped) return Word{};
    return Word{{l}};
  }
};

inline Word apply_substitution(const Substitution& s, const Word& w) {
  Word out;
  for (const Letter& l : w.letters) out += s.image(l);
  return out;
}

/// 1-based position (index into w.letters) of the k-th occurrence of l, or
/// npos if there is no such occurrence.
inline std::size_t occurrence_position(const Word& w, const Letter& l, int k) {
  int seen = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == l && ++seen == k) return i;
  }
  return static_cast<std::size_t>(-1);
}

/// The factor of w strictly between the i-th occurrence of a and the j-th
/// occurrence of b. Occurrence indices are 1-based.
inline Word subword_between(const Word& w, const Letter& a, int i, const Letter& b,
                            int j) {
  std::size_t pa = occurrence_position(w, a, i);
  std::size_t pb = occurrence_position(w, b, j);
  if (pa == static_cast<std::size_t>(-1))
    throw std::invalid_argument("no occurrence " + std::to_string(i) + " of " +
                                format_letter(a));
  if (pb == static_cast<std::size_t>(-1))
    throw std::invalid_argument("no occurrence " + std::to_string(j) + " of " +
                                format_letter(b));
  if (pa >= pb)
    throw std::invalid_argument("occurrence of " + format_letter(a) +
                                " does not precede occurrence of " + format_letter(b));
  return Word({w.letters.begin() + static_cast<std::ptrdiff_t>(pa) + 1,
               w.letters.begin() + static_cast<std::ptrdiff_t>(pb)});
}

/// Number of (possibly overlapping) occurrences of u as a contiguous factor.
inline int count_occurrences_of_factor(const Word& u, const Word& w) {
  if (u.empty()) throw std::invalid_argument("empty factor pattern");
  if (u.size() > w.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (std::equal(u.letters.begin(), u.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(i)))
      ++count;
  }
  return count;
}

}  // namespace monvar

template <>
struct std::hash<monvar::Word> {
  std::size_t operator()(const monvar::Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const monvar::Letter& l : w.letters)
      h = h * 0x100000001b3ull + std::hash<monvar::Letter>{}(l);
    return h;
  }
};

#endif  // MONVAR_WORD_HPP_
