#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lvgame/model.hpp"
#include "lvgame/premium_game.hpp"
#include "lvgame/simulate.hpp"

namespace lvgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// section -> key -> raw value. Sections: model, integration, mapping.
using Settings = std::map<std::string, std::map<std::string, std::string>>;

/// Reads a flat INI file (`[section]` headers, `key = value` lines, `#`/`;`
/// comments). Throws IoError when unreadable, InvalidConfig when malformed.
Settings load_config(const std::string& path);

/// Builds the model described by the `model` section. The `variant` key picks
/// the family: logistic, competitive, cooperative, nondim, competitive2,
/// cooperative2, predator_prey, nplayer.
ModelSpec model_from_settings(const Settings& settings);
IntegrationConfig integration_from_settings(const Settings& settings);
PremiumMapping mapping_from_settings(const Settings& settings);

/// Parses "1,2,3" into numbers.
std::vector<double> parse_list(const std::string& text, const std::string& what);

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvgame::cli
