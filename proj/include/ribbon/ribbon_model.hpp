#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/freegroup.hpp"

namespace ribbon {

/// A band of the immersed disc-band surface. `word` lists the ribbon
/// singularities in order from the start foot to the end foot.
struct Band {
  std::string id;
  std::uint32_t start_disc = 1;
  std::uint32_t end_disc = 1;
  Word word;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Disc count plus bands: the homotopy shadow of a ribbon surface.
/// Feet positions and the planar embedding are not recorded.
struct RibbonCode {
  std::uint32_t discs = 1;
  std::vector<Band> bands;

  std::uint32_t band_count() const noexcept { return static_cast<std::uint32_t>(bands.size()); }

  friend bool operator==(const RibbonCode&, const RibbonCode&) = default;
};

struct SurfaceStats {
  std::uint32_t discs = 0;
  std::uint32_t bands = 0;
  std::int64_t chi = 0;
  bool connected = false;
  /// Genus of the double; present only for connected codes.
  std::optional<std::int64_t> double_genus;
  std::uint32_t components = 0;
};

std::vector<std::string> validate(const RibbonCode& code);

/// Connected components of the disc-band incidence graph.
std::uint32_t component_count(const RibbonCode& code);
bool is_connected(const RibbonCode& code);

/// Requires a valid code.
SurfaceStats stats(const RibbonCode& code);
std::string to_string(const SurfaceStats& s);

enum class ParseMode {
  /// Reject semantic problems (disc range, duplicate ids) with positioned errors.
  Strict,
  /// Only reject syntax; the result may need `validate`.
  Lenient,
};

RibbonCode parse_ribbon_code(std::string_view text, ParseMode mode = ParseMode::Strict);
std::string serialize_ribbon_code(const RibbonCode& code);

/// The four-disc, three-band ribbon disc used throughout the tests:
/// B1: 1->2 through +3, B2: 2->3 through +1, B3: 3->4 through +4 then +2.
RibbonCode example_code();

}  // namespace ribbon
