#include "cheshire/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace cheshire {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  double x = 0.0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last || !std::isfinite(x))
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(value) +
                      "'");
  return x;
}

std::string format_exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

InsertionKind parse_insertion(std::string_view s) {
  const std::string v = lower(s);
  if (v == "none") return InsertionKind::None;
  if (v == "absorber") return InsertionKind::Absorber;
  if (v == "magnet") return InsertionKind::Magnet;
  throw ConfigError("unknown insertion '" + std::string(s) + "' (none|absorber|magnet)");
}

Path parse_path(std::string_view s) {
  const std::string v = lower(s);
  if (v == "i") return Path::I;
  if (v == "ii") return Path::II;
  throw ConfigError("unknown path '" + std::string(s) + "' (I|II)");
}

Truncation parse_truncation(std::string_view s) {
  const std::string v = lower(s);
  if (v == "exact") return Truncation::Exact;
  if (v == "linear") return Truncation::Linear;
  if (v == "quadratic") return Truncation::Quadratic;
  throw ConfigError("unknown truncation '" + std::string(s) + "' (exact|linear|quadratic)");
}

const char* to_string(InsertionKind k) noexcept {
  switch (k) {
    case InsertionKind::None:
      return "none";
    case InsertionKind::Absorber:
      return "absorber";
    case InsertionKind::Magnet:
      return "magnet";
  }
  return "?";
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "insertion") {
    cfg.insertion = parse_insertion(value);
  } else if (key == "path") {
    cfg.path = parse_path(value);
  } else if (key == "alpha_deg") {
    cfg.alpha_rad = deg_to_rad(parse_real(key, value));
  } else if (key == "alpha_rad") {
    cfg.alpha_rad = parse_real(key, value);
  } else if (key == "transmissivity") {
    const double t = parse_real(key, value);
    if (t < 0.0 || t > 1.0)
      throw ConfigError("transmissivity must lie in [0, 1], got " + std::string(value));
    cfg.transmissivity = t;
  } else if (key == "chi_deg") {
    cfg.chi_rad = deg_to_rad(parse_real(key, value));
  } else if (key == "chi_rad") {
    cfg.chi_rad = parse_real(key, value);
  } else if (key == "truncation") {
    cfg.truncation = parse_truncation(value);
  } else if (key == "scale_ref_cps") {
    const double s = parse_real(key, value);
    if (s < 0.0) throw ConfigError("scale_ref_cps must be nonnegative");
    cfg.scale_ref_cps = s;
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

    // alpha_deg/alpha_rad and chi_deg/chi_rad share a slot
    std::string slot = key;
    if (key == "alpha_deg" || key == "alpha_rad") slot = "alpha";
    if (key == "chi_deg" || key == "chi_rad") slot = "chi";
    if (!seen.insert(slot).second)
      throw ConfigError("line " + std::to_string(line_no) + ": '" + key +
                        "' given more than once (or both degree and radian forms)");
    try {
      apply_setting(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file '" + file.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "insertion = " << to_string(cfg.insertion) << '\n';
  if (cfg.path) out << "path = " << to_string(*cfg.path) << '\n';
  if (cfg.alpha_rad) out << "alpha_rad = " << format_exact(*cfg.alpha_rad) << '\n';
  if (cfg.transmissivity) out << "transmissivity = " << format_exact(*cfg.transmissivity) << '\n';
  out << "chi_rad = " << format_exact(cfg.chi_rad) << '\n';
  if (cfg.truncation) out << "truncation = " << to_string(*cfg.truncation) << '\n';
  out << "scale_ref_cps = " << format_exact(cfg.scale_ref_cps) << '\n';
  return out.str();
}

Scenario to_scenario(const ScenarioConfig& cfg) {
  const auto forbid = [&](bool present, const char* key) {
    if (present)
      throw ConfigError(std::string("'") + key + "' does not apply to insertion " +
                        to_string(cfg.insertion));
  };
  const auto require = [](bool present, const char* key) {
    if (!present) throw ConfigError(std::string("missing required key '") + key + "'");
  };

  switch (cfg.insertion) {
    case InsertionKind::None:
      forbid(cfg.path.has_value(), "path");
      forbid(cfg.alpha_rad.has_value(), "alpha");
      forbid(cfg.transmissivity.has_value(), "transmissivity");
      forbid(cfg.truncation.has_value(), "truncation");
      return reference_scenario(cfg.chi_rad);
    case InsertionKind::Absorber:
      forbid(cfg.alpha_rad.has_value(), "alpha");
      forbid(cfg.truncation.has_value(), "truncation");
      require(cfg.path.has_value(), "path");
      require(cfg.transmissivity.has_value(), "transmissivity");
      return absorber_scenario(*cfg.path, *cfg.transmissivity, cfg.chi_rad);
    case InsertionKind::Magnet:
      forbid(cfg.transmissivity.has_value(), "transmissivity");
      require(cfg.path.has_value(), "path");
      require(cfg.alpha_rad.has_value(), "alpha_deg or alpha_rad");
      return magnet_scenario(*cfg.path, *cfg.alpha_rad, cfg.truncation.value_or(Truncation::Exact),
                             cfg.chi_rad);
  }
  throw ConfigError("unreachable insertion kind");
}

}  // namespace cheshire
