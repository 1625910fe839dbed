#ifndef MONVAR_LETTER_HPP_
#define MONVAR_LETTER_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace monvar {

/// A structured alphabet symbol: a lowercase base name, an optional integer
/// tuple subscript and an optional parenthesized integer superscript.
/// Plain letters like x have an empty subscript; x_3 carries the 1-tuple (3);
/// indexed family letters like x_{(1,2)}^{(3)} carry both.
struct Letter {
  std::string base;
  std::vector<int> sub;
  std::optional<int> sup;

  Letter() = default;
  explicit Letter(std::string b, std::vector<int> s = {},
                  std::optional<int> p = std::nullopt)
      : base(std::move(b)), sub(std::move(s)), sup(p) {}

  // Total order: base, then subscript tuple, then superscript (absent first).
  auto operator<=>(const Letter&) const = default;
};

inline std::string format_letter(const Letter& l) {
  std::string out = l.base;
  if (l.sub.size() == 1) {
    out += '_';
    out += std::to_string(l.sub[0]);
  } else if (l.sub.size() > 1) {
    out += '[';
    for (std::size_t i = 0; i < l.sub.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(l.sub[i]);
    }
    out += ']';
  }
  if (l.sup) {
    out += '^';
    out += std::to_string(*l.sup);
  }
  return out;
}

}  // namespace monvar

template <>
struct std::hash<monvar::Letter> {
  std::size_t operator()(const monvar::Letter& l) const noexcept {
    std::size_t h = std::hash<std::string>{}(l.base);
    for (int v : l.sub) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
    if (l.sup) h = h * 1000003u + static_cast<std::size_t>(*l.sup) + 7;
    return h;
  }
};

#endif  // MONVAR_LETTER_HPP_
