#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

/// One signed ribbon singularity: the band passes through disc `disc`.
/// After a class map is applied, `disc` holds a class id instead.
struct Letter {
  std::uint32_t disc = 1;
  Sign sign = Sign::Positive;

  constexpr Letter inverse() const noexcept { return {disc, opposite(sign)}; }
  constexpr bool cancels(const Letter& other) const noexcept {
    return disc == other.disc && sign != other.sign;
  }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter pos(std::uint32_t disc) noexcept { return {disc, Sign::Positive}; }
constexpr Letter neg(std::uint32_t disc) noexcept { return {disc, Sign::Negative}; }

/// Element of the free group on disc meridians, stored as an unreduced letter sequence.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Total map from disc indices {1..d} to class ids.
class ClassMap {
 public:
  /// The identity map on {1..d}.
  static ClassMap discrete(std::uint32_t discs);

  /// `class_of[i]` is the class of disc i+1.
  explicit ClassMap(std::vector<std::uint32_t> class_of) : class_of_(std::move(class_of)) {}

  std::uint32_t discs() const noexcept { return static_cast<std::uint32_t>(class_of_.size()); }
  /// Throws DomainError when `disc` is outside {1..d}.
  std::uint32_t of(std::uint32_t disc) const;

 private:
  std::vector<std::uint32_t> class_of_;
};

Word apply_class_map(const Word& w, const ClassMap& c);
Word free_reduce(const Word& w);
bool is_identity(const Word& w);

std::string to_string(const Letter& l);
/// Space-separated `+k`/`-k` tokens; the empty word renders as "".
std::string to_string(const Word& w);

/// Parses whitespace-separated `+k`/`-k` tokens. `line` and `first_column` locate
/// `text` inside a larger document for ParseError positions.
Word parse_word(std::string_view text, std::size_t line = 1, std::size_t first_column = 1);

}  // namespace ribbon
