#include "ribbon/freegroup.hpp"

#include <charconv>

#include "ribbon/errors.hpp"

namespace ribbon {

ClassMap ClassMap::discrete(std::uint32_t discs) {
  std::vector<std::uint32_t> ids(discs);
  for (std::uint32_t i = 0; i < discs; ++i) ids[i] = i + 1;
  return ClassMap(std::move(ids));
}

std::uint32_t ClassMap::of(std::uint32_t disc) const {
  if (disc < 1 || disc > class_of_.size()) {
    throw DomainError("disc " + std::to_string(disc) + " out of range 1.." +
                      std::to_string(class_of_.size()));
  }
  return class_of_[disc - 1];
}

Word apply_class_map(const Word& w, const ClassMap& c) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back({c.of(l.disc), l.sign});
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_identity(const Word& w) { return free_reduce(w).empty(); }

std::string to_string(const Letter& l) {
  return (l.sign == Sign::Positive ? "+" : "-") + std::to_string(l.disc);
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

Word parse_word(std::string_view text, std::size_t line, std::size_t first_column) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    const std::size_t column = first_column + start;

    if (token[0] != '+' && token[0] != '-') {
      throw ParseError(line, column, "letter '" + std::string(token) + "' must start with '+' or '-'");
    }
    const std::string_view digits = token.substr(1);
    std::uint32_t disc = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), disc);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      throw ParseError(line, column, "letter '" + std::string(token) + "' needs a decimal disc index");
    }
    if (disc == 0) throw ParseError(line, column, "disc index must be >= 1");
    w.push_back({disc, token[0] == '+' ? Sign::Positive : Sign::Negative});
  }
  return w;
}

}  // namespace ribbon
