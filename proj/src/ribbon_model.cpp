#include "ribbon/ribbon_model.hpp"

#include <charconv>
#include <numeric>
#include <set>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::string> validate(const RibbonCode& code) {
  std::vector<std::string> diags;
  if (code.discs < 1) diags.push_back("disc count must be >= 1");

  auto in_range = [&](std::uint32_t disc) { return disc >= 1 && disc <= code.discs; };
  std::set<std::string_view> seen;
  for (const Band& band : code.bands) {
    const std::string name = "band " + (band.id.empty() ? std::string("<unnamed>") : band.id);
    if (!is_valid_id(band.id)) diags.push_back(name + ": id must match [A-Za-z0-9_]+");
    if (!seen.insert(band.id).second) diags.push_back(name + ": duplicate id");
    if (!in_range(band.start_disc)) {
      diags.push_back(name + ": foot disc " + std::to_string(band.start_disc) + " out of range");
    }
    if (!in_range(band.end_disc) && band.end_disc != band.start_disc) {
      diags.push_back(name + ": foot disc " + std::to_string(band.end_disc) + " out of range");
    }
    for (std::size_t i = 0; i < band.word.size(); ++i) {
      if (!in_range(band.word[i].disc)) {
        diags.push_back(name + ": letter " + std::to_string(i) + " references disc " +
                        std::to_string(band.word[i].disc) + " out of range");
      }
    }
  }
  return diags;
}

std::uint32_t component_count(const RibbonCode& code) {
  DisjointSets sets(code.discs);
  std::uint32_t components = code.discs;
  for (const Band& band : code.bands) {
    if (band.start_disc < 1 || band.start_disc > code.discs || band.end_disc < 1 || band.end_disc > code.discs) {
      continue;
    }
    if (sets.unite(band.start_disc - 1, band.end_disc - 1)) --components;
  }
  return components;
}

bool is_connected(const RibbonCode& code) { return component_count(code) == 1; }

SurfaceStats stats(const RibbonCode& code) {
  SurfaceStats s;
  s.discs = code.discs;
  s.bands = code.band_count();
  s.chi = static_cast<std::int64_t>(s.discs) - static_cast<std::int64_t>(s.bands);
  s.components = component_count(code);
  s.connected = s.components == 1;
  // The double of a connected S along its whole boundary has chi(F) = 2 chi(S).
  if (s.connected) s.double_genus = 1 - s.chi;
  return s;
}

std::string to_string(const SurfaceStats& s) {
  return "d=" + std::to_string(s.discs) + " b=" + std::to_string(s.bands) + " chi=" + std::to_string(s.chi) +
         " connected=" + (s.connected ? "true" : "false") +
         " double_genus=" + (s.double_genus ? std::to_string(*s.double_genus) : std::string("none")) +
         " components=" + std::to_string(s.components);
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  Token next(const char* expected) {
    skip_space();
    if (pos_ >= line_.size()) fail(pos_, std::string("expected ") + expected);
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
    return {line_.substr(start, pos_ - start), start + 1};
  }

  std::string_view rest() const { return line_.substr(pos_); }
  std::size_t rest_column() const { return pos_ + 1; }
  std::size_t line_no() const { return line_no_; }

  [[noreturn]] void fail(std::size_t offset, const std::string& what) const {
    throw ParseError(line_no_, offset + 1, what);
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(line_no_, t.column, what);
  }

  std::uint32_t number(const Token& t, const char* what) const {
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || end != t.text.data() + t.text.size()) {
      fail(t, std::string(what) + " must be a decimal integer, got '" + std::string(t.text) + "'");
    }
    return value;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

// Offset of the i-th whitespace-separated token in `s`.
std::size_t token_offset(std::string_view s, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t seen = 0;; ++seen) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    if (seen == index) return pos;
    while (pos < s.size() && !(s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  }
}

}  // namespace

RibbonCode parse_ribbon_code(std::string_view text, ParseMode mode) {
  const bool strict = mode == ParseMode::Strict;
  RibbonCode code;
  bool have_header = false;
  std::set<std::string, std::less<>> ids;

  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(offset, eol - offset);
    offset = eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    LineParser p(raw, line_no);
    if (p.at_end()) continue;
    const Token keyword = p.next("keyword");

    if (keyword.text == "discs") {
      if (have_header) p.fail(keyword, "duplicate 'discs' header");
      const Token count = p.next("disc count");
      code.discs = p.number(count, "disc count");
      if (strict && code.discs < 1) p.fail(count, "disc count must be >= 1");
      if (!p.at_end()) p.fail(p.next("end of line"), "unexpected token after disc count");
      have_header = true;
    } else if (keyword.text == "band") {
      if (!have_header) p.fail(keyword, "'band' before 'discs' header");
      Band band;
      const Token id = p.next("band id");
      if (!is_valid_id(id.text)) p.fail(id, "band id must match [A-Za-z0-9_]+");
      band.id = std::string(id.text);
      if (strict && !ids.insert(band.id).second) p.fail(id, "duplicate id '" + band.id + "'");

      const Token start = p.next("start disc");
      band.start_disc = p.number(start, "start disc");
      const Token end = p.next("end disc");
      band.end_disc = p.number(end, "end disc");
      for (const Token* foot : {&start, &end}) {
        const std::uint32_t disc = p.number(*foot, "foot disc");
        if (strict && (disc < 1 || disc > code.discs)) {
          p.fail(*foot, "foot disc " + std::to_string(disc) + " out of range");
        }
      }
      const Token colon = p.next("':'");
      if (colon.text != ":") p.fail(colon, "expected ':' before the singularity word");

      band.word = parse_word(p.rest(), line_no, p.rest_column());
      if (strict) {
        for (std::size_t i = 0; i < band.word.size(); ++i) {
          if (band.word[i].disc > code.discs) {
            p.fail(p.rest_column() - 1 + token_offset(p.rest(), i),
                   "letter disc " + std::to_string(band.word[i].disc) + " out of range");
          }
        }
      }
      code.bands.push_back(std::move(band));
    } else {
      p.fail(keyword, "unknown keyword '" + std::string(keyword.text) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, 1, "missing 'discs' header");
  return code;
}

std::string serialize_ribbon_code(const RibbonCode& code) {
  std::string out = "discs " + std::to_string(code.discs) + "\n";
  for (const Band& band : code.bands) {
    out += "band " + band.id + " " + std::to_string(band.start_disc) + " " + std::to_string(band.end_disc) + " :";
    if (!band.word.empty()) out += " " + to_string(band.word);
    out += "\n";
  }
  return out;
}

RibbonCode example_code() {
  return RibbonCode{4,
                    {
                        {"B1", 1, 2, Word{pos(3)}},
                        {"B2", 2, 3, Word{pos(1)}},
                        {"B3", 3, 4, Word{pos(4), pos(2)}},
                    }};
}

}  // namespace ribbon
