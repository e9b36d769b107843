#include "macrofin/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include <fmt/format.h>

namespace macrofin {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string where(int line) { return line > 0 ? fmt::format("line {}: ", line) : std::string{}; }

double parse_real(std::string_view key, std::string_view text, int line) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(ConfigError::Kind::parse,
                      fmt::format("{}value '{}' for '{}' is not a number", where(line), text, key),
                      line, std::string(key));
  }
  return v;
}

template <class Int>
Int parse_integer(std::string_view key, std::string_view text, int line) {
  Int v{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(ConfigError::Kind::parse,
                      fmt::format("{}value '{}' for '{}' is not an integer", where(line), text, key),
                      line, std::string(key));
  }
  return v;
}

// Shortest representation that reads back to the same double.
std::string real(double v) { return fmt::format("{}", v); }

}  // namespace

ConfigError::ConfigError(Kind kind, std::string message, int line, std::string key,
                         std::vector<Violation> violations)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      line_(line),
      key_(std::move(key)),
      violations_(std::move(violations)) {}

void apply_setting(LoadedConfig& cfg, std::string_view key, std::string_view value, int line) {
  key = trim(key);
  value = trim(value);
  if (value.empty()) {
    throw ConfigError(ConfigError::Kind::parse,
                      fmt::format("{}missing value for '{}'", where(line), key), line,
                      std::string(key));
  }
  if (const auto* f = find_param_field(key)) {
    cfg.params.*f->member = parse_real(key, value, line);
    return;
  }
  auto& sim = cfg.sim;
  if (key == "t_end") {
    sim.t_end = parse_real(key, value, line);
  } else if (key == "dt") {
    sim.dt = parse_real(key, value, line);
  } else if (key == "seed") {
    sim.seed = parse_integer<std::uint64_t>(key, value, line);
  } else if (key == "record_stride") {
    sim.record_stride = parse_integer<int>(key, value, line);
  } else if (key == "omega0") {
    sim.init_econ.omega = parse_real(key, value, line);
  } else if (key == "e0") {
    sim.init_econ.e = parse_real(key, value, line);
  } else if (key == "m0") {
    sim.init_econ.m = parse_real(key, value, line);
  } else if (key == "ell0") {
    sim.init_econ.ell = parse_real(key, value, line);
  } else if (key == "s0") {
    sim.init_market.s = parse_real(key, value, line);
  } else if (key == "mu0") {
    sim.init_market.mu = parse_real(key, value, line);
    sim.mu0_follows_r_l = false;
  } else {
    throw ConfigError(ConfigError::Kind::unknown_key,
                      fmt::format("{}unknown key '{}'", where(line), key), line, std::string(key));
  }
}

std::pair<std::string, std::string> split_assignment(std::string_view text, int line) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError(ConfigError::Kind::parse,
                      fmt::format("{}expected 'key = value', got '{}'", where(line), trim(text)),
                      line);
  }
  auto key = trim(text.substr(0, eq));
  if (key.empty()) {
    throw ConfigError(ConfigError::Kind::parse, fmt::format("{}empty key", where(line)), line);
  }
  return {std::string(key), std::string(trim(text.substr(eq + 1)))};
}

void require_valid(const LoadedConfig& cfg) {
  auto violations = validate(cfg.params);
  auto sim = validate(cfg.sim);
  violations.insert(violations.end(), sim.begin(), sim.end());
  if (violations.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& v : violations) msg += "\n  " + describe(v);
  throw ConfigError(ConfigError::Kind::validation, std::move(msg), 0, {}, std::move(violations));
}

LoadedConfig load_config(std::string_view text) {
  LoadedConfig cfg{default_params(), default_sim_config()};
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto [key, value] = split_assignment(line, line_no);
    if (!seen.insert(key).second) {
      throw ConfigError(ConfigError::Kind::parse,
                        fmt::format("line {}: duplicate key '{}'", line_no, key), line_no, key);
    }
    apply_setting(cfg, key, value, line_no);
  }
  require_valid(cfg);
  return cfg;
}

std::string serialize(const LoadedConfig& cfg) {
  std::string out = "# model parameters\n";
  for (const auto& f : param_fields()) {
    out += fmt::format("{} = {}\n", f.name, real(cfg.params.*f.member));
  }
  const auto& s = cfg.sim;
  out += "# simulation controls\n";
  out += fmt::format("t_end = {}\n", real(s.t_end));
  out += fmt::format("dt = {}\n", real(s.dt));
  out += fmt::format("seed = {}\n", s.seed);
  out += fmt::format("record_stride = {}\n", s.record_stride);
  out += fmt::format("omega0 = {}\n", real(s.init_econ.omega));
  out += fmt::format("e0 = {}\n", real(s.init_econ.e));
  out += fmt::format("m0 = {}\n", real(s.init_econ.m));
  out += fmt::format("ell0 = {}\n", real(s.init_econ.ell));
  out += fmt::format("s0 = {}\n", real(s.init_market.s));
  if (s.mu0_follows_r_l) {
    out += "# mu0 follows r_l\n";
  } else {
    out += fmt::format("mu0 = {}\n", real(s.init_market.mu));
  }
  return out;
}

std::string describe_inline(const LoadedConfig& cfg) {
  std::string out;
  for (const auto& f : param_fields()) {
    out += fmt::format("{}={} ", f.name, real(cfg.params.*f.member));
  }
  const auto& s = cfg.sim;
  const auto mk = resolved_init_market(s, cfg.params);
  out += fmt::format(
      "t_end={} dt={} seed={} record_stride={} omega0={} e0={} m0={} ell0={} s0={} mu0={}",
      real(s.t_end), real(s.dt), s.seed, s.record_stride, real(s.init_econ.omega),
      real(s.init_econ.e), real(s.init_econ.m), real(s.init_econ.ell), real(mk.s), real(mk.mu));
  return out;
}

}  // namespace macrofin
