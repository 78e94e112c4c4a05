#include "rankbrittle/caps.hpp"

#include <charconv>
#include <cstdlib>

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

void SolverCaps::apply_overrides(std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("cap override '" + std::string(item) + "' is not key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw InputError("cap override '" + std::string(item) + "' has a non-numeric value");
    }
    const int iv = static_cast<int>(std::min<std::uint64_t>(v, 64));
    if (key == "rbrit1") rbrit1_max_n = iv;
    else if (key == "rbrit2") rbrit2_max_n = iv;
    else if (key == "rbrit") rbrit_max_n = iv;
    else if (key == "rankdepth") rank_depth_max_n = iv;
    else if (key == "beta") beta_max_n = iv;
    else if (key == "lrw") lrw_max_n = iv;
    else if (key == "vm") vertex_minor_max_n = iv;
    else if (key == "orbit") orbit_cap = static_cast<std::size_t>(v);
    else if (key == "iso") iso_node_limit = v;
    else throw InputError("unknown cap '" + std::string(key) + "'");
  }
}

SolverCaps SolverCaps::from_env() {
  SolverCaps caps;
  if (const char* env = std::getenv("RANKBRITTLE_CAPS")) caps.apply_overrides(env);
  return caps;
}

}  // namespace rankbrittle
