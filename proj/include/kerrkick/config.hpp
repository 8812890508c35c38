#pragma once

// Flat "key = value" run configuration.
//
//   # comment
//   mode     = simulate        # simulate | analytic | compare | scan
//   alpha    = 0.04            # real, or complex as (re,im)
//   epsilon  = 0.01
//   T        = 1
//   chi_a    = 1
//   chi_b    = 1
//   kicks    = 2000
//   cutoff_a = 15
//   cutoff_b = 15
//   ordering = kick-then-free  # or free-then-kick
//   out      = -               # '-' is stdout
//   scan_param = alpha         # scan mode only: alpha | epsilon | T
//   scan_start = 0.02
//   scan_stop  = 0.06
//   scan_steps = 5

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kerrkick/errors.hpp"
#include "kerrkick/hamiltonians.hpp"
#include "kerrkick/propagation.hpp"

namespace kerrkick {

enum class Mode { Simulate, Analytic, Compare, Scan };
enum class ScanParam { Alpha, Epsilon, T };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Simulate: return "simulate";
    case Mode::Analytic: return "analytic";
    case Mode::Compare: return "compare";
    case Mode::Scan: return "scan";
  }
  return "?";
}

inline std::string_view to_string(ScanParam p) {
  switch (p) {
    case ScanParam::Alpha: return "alpha";
    case ScanParam::Epsilon: return "epsilon";
    case ScanParam::T: return "T";
  }
  return "?";
}

struct ScanSpec {
  ScanParam param = ScanParam::Alpha;
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 2;

  double value(std::size_t i) const {
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }

  bool operator==(const ScanSpec&) const = default;
};

struct RunConfig {
  SystemParams params;
  std::size_t n_kicks = 2000;
  Ordering ordering = kDefaultOrdering;
  Mode mode = Mode::Simulate;
  std::optional<ScanSpec> scan;
  std::string output = "-";

  bool operator==(const RunConfig&) const = default;
};

// Key -> raw value; later insertions win.
using ConfigOverrides = std::map<std::string, std::string, std::less<>>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  std::string where;  // "line N" or "flag --x"
};

inline double parse_real(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("not a real number: '" + std::string(text) + "'");
  }
  return v;
}

// "x" or "(re,im)"
inline cplx parse_complex(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ConfigError("malformed complex value: '" + std::string(text) + "'");
    const auto inner = text.substr(1, text.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ConfigError("malformed complex value: '" + std::string(text) + "'");
    return {parse_real(trim(inner.substr(0, comma))), parse_real(trim(inner.substr(comma + 1)))};
  }
  return {parse_real(text), 0.0};
}

inline std::size_t parse_count(std::string_view text) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0) {
    throw ConfigError("not a nonnegative integer: '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(v);
}

inline Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::Simulate, Mode::Analytic, Mode::Compare, Mode::Scan})
    if (to_string(m) == s) return m;
  throw ConfigError("unknown mode '" + std::string(s) + "'");
}

inline ScanParam parse_scan_param(std::string_view s) {
  for (ScanParam p : {ScanParam::Alpha, ScanParam::Epsilon, ScanParam::T})
    if (to_string(p) == s) return p;
  throw ConfigError("unknown scan_param '" + std::string(s) + "' (expected alpha, epsilon or T)");
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_complex(cplx v) {
  if (v.imag() == 0.0) return format_real(v.real());
  return "(" + format_real(v.real()) + "," + format_real(v.imag()) + ")";
}

}  // namespace detail

inline constexpr std::array<std::string_view, 15> kConfigKeys{
    "mode",     "alpha",    "epsilon",  "T",          "chi_a",      "chi_b",      "kicks",     "cutoff_a",
    "cutoff_b", "ordering", "out",      "scan_param", "scan_start", "scan_stop",  "scan_steps"};

inline bool is_config_key(std::string_view key) {
  return std::find(kConfigKeys.begin(), kConfigKeys.end(), key) != kConfigKeys.end();
}

// Parses `text`, applies `overrides` on top, fills defaults and validates.
// Errors name the offending line (or flag).
inline RunConfig parse_config(std::string_view text, const ConfigOverrides& overrides = {}) {
  std::map<std::string, detail::Entry, std::less<>> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (!is_config_key(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (entries.contains(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
    entries[key] = {value, where};
  }
  for (const auto& [key, value] : overrides) {
    if (!is_config_key(key)) throw ConfigError("override: unknown key '" + key + "'");
    entries[key] = {value, "override of '" + key + "'"};
  }

  RunConfig cfg;
  auto apply = [&](std::string_view key, auto&& setter) {
    const auto it = entries.find(key);
    if (it == entries.end()) return;
    try {
      setter(std::string_view(it->second.value));
    } catch (const Error& e) {
      throw ConfigError(it->second.where + ": " + std::string(key) + ": " + e.what());
    }
  };

  apply("mode", [&](std::string_view v) { cfg.mode = detail::parse_mode(v); });
  apply("alpha", [&](std::string_view v) { cfg.params.alpha = detail::parse_complex(v); });
  apply("epsilon", [&](std::string_view v) { cfg.params.epsilon = detail::parse_complex(v); });
  apply("T", [&](std::string_view v) { cfg.params.T = detail::parse_real(v); });
  apply("chi_a", [&](std::string_view v) { cfg.params.chi_a = detail::parse_real(v); });
  apply("chi_b", [&](std::string_view v) { cfg.params.chi_b = detail::parse_real(v); });
  apply("kicks", [&](std::string_view v) { cfg.n_kicks = detail::parse_count(v); });
  apply("cutoff_a", [&](std::string_view v) { cfg.params.dims.dim_a = detail::parse_count(v); });
  apply("cutoff_b", [&](std::string_view v) { cfg.params.dims.dim_b = detail::parse_count(v); });
  apply("ordering", [&](std::string_view v) { cfg.ordering = parse_ordering(v); });
  apply("out", [&](std::string_view v) { cfg.output = std::string(v); });

  static constexpr std::array<std::string_view, 4> scan_keys{"scan_param", "scan_start", "scan_stop", "scan_steps"};
  const bool any_scan = std::any_of(scan_keys.begin(), scan_keys.end(), [&](auto k) { return entries.contains(k); });
  if (cfg.mode == Mode::Scan) {
    std::string missing;
    for (auto k : scan_keys)
      if (!entries.contains(k)) missing += (missing.empty() ? "" : ", ") + std::string(k);
    if (!missing.empty()) throw ConfigError("mode = scan requires keys: " + missing);
    ScanSpec scan;
    apply("scan_param", [&](std::string_view v) { scan.param = detail::parse_scan_param(v); });
    apply("scan_start", [&](std::string_view v) { scan.start = detail::parse_real(v); });
    apply("scan_stop", [&](std::string_view v) { scan.stop = detail::parse_real(v); });
    apply("scan_steps", [&](std::string_view v) { scan.steps = detail::parse_count(v); });
    if (scan.steps < 2) throw ConfigError(entries.at("scan_steps").where + ": scan_steps must be >= 2");
    if (!(scan.start < scan.stop)) throw ConfigError(entries.at("scan_stop").where + ": scan_start must be < scan_stop");
    if (scan.param == ScanParam::T && !(scan.start > 0.0)) {
      throw ConfigError(entries.at("scan_start").where + ": T scan must start above 0");
    }
    cfg.scan = scan;
  } else if (any_scan) {
    throw ConfigError("scan_* keys are only valid with mode = scan");
  }

  if (cfg.n_kicks == 0) throw ConfigError("kicks must be positive");
  try {
    cfg.params.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

// Renders a config that parse_config() maps back to an equal RunConfig.
inline std::string to_config_text(const RunConfig& cfg) {
  std::ostringstream os;
  os << "mode = " << to_string(cfg.mode) << '\n'
     << "alpha = " << detail::format_complex(cfg.params.alpha) << '\n'
     << "epsilon = " << detail::format_complex(cfg.params.epsilon) << '\n'
     << "T = " << detail::format_real(cfg.params.T) << '\n'
     << "chi_a = " << detail::format_real(cfg.params.chi_a) << '\n'
     << "chi_b = " << detail::format_real(cfg.params.chi_b) << '\n'
     << "kicks = " << cfg.n_kicks << '\n'
     << "cutoff_a = " << cfg.params.dims.dim_a << '\n'
     << "cutoff_b = " << cfg.params.dims.dim_b << '\n'
     << "ordering = " << to_string(cfg.ordering) << '\n'
     << "out = " << cfg.output << '\n';
  if (cfg.scan) {
    os << "scan_param = " << to_string(cfg.scan->param) << '\n'
       << "scan_start = " << detail::format_real(cfg.scan->start) << '\n'
       << "scan_stop = " << detail::format_real(cfg.scan->stop) << '\n'
       << "scan_steps = " << cfg.scan->steps << '\n';
  }
  return os.str();
}

}  // namespace kerrkick
