#include "monoidforge/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace monoidforge {

  Limits Limits::from_environment() {
    Limits limits;
    if (char const* raw = std::getenv("MONOIDFORGE_MAX_ORDER")) {
      std::string_view text(raw);
      std::size_t      value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec == std::errc() && ptr == text.data() + text.size() && value >= 1
          && value <= 24) {
        limits.max_subset_order = value;
      }
    }
    return limits;
  }

}  // namespace monoidforge
