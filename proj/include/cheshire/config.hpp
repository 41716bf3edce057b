#pragma once

// Flat `key = value` scenario configuration, one pair per line, `#` starts a
// comment. Recognised keys:
//
//   insertion       none | absorber | magnet          (default none)
//   path            I | II
//   alpha_deg       rotation angle in degrees    } at most one
//   alpha_rad       rotation angle in radians    }
//   transmissivity  absorber intensity transmission in [0, 1]
//   chi_deg         phase in degrees             } at most one, default 0
//   chi_rad         phase in radians             }
//   truncation      exact | linear | quadratic        (default exact)
//   scale_ref_cps   counts per second at I_ref         (default 11.25)
//
// Unknown keys, repeated keys and keys that do not apply to the chosen
// insertion are errors.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cheshire/experiment.hpp"

namespace cheshire {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InsertionKind { None, Absorber, Magnet };

struct ScenarioConfig {
  InsertionKind insertion = InsertionKind::None;
  std::optional<Path> path;
  std::optional<double> alpha_rad;
  std::optional<double> transmissivity;
  double chi_rad = 0.0;
  std::optional<Truncation> truncation;
  double scale_ref_cps = kDefaultScaleRefCps;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Applies one setting; degree keys are converted to radians here.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& file);
/// Emits only keys that carry information; angles are written in radians
/// with round-trip precision.
std::string serialize_config(const ScenarioConfig& cfg);

/// Validates the combination of keys and builds the scenario.
Scenario to_scenario(const ScenarioConfig& cfg);

InsertionKind parse_insertion(std::string_view s);
Path parse_path(std::string_view s);
Truncation parse_truncation(std::string_view s);
const char* to_string(InsertionKind k) noexcept;

}  // namespace cheshire
