#pragma once

// Executes a RunConfig and writes CSV.
//
// simulate / analytic:
//   k,P00,P01,P10,P11,leakage,concurrence,F_B1,F_B2,F_B3,F_B4
// compare appends:
//   A00,A01,A10,A11,dP_max
// scan (one row per parameter value):
//   <param>,max_concurrence,k_at_max,max_leakage

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "kerrkick/analytic.hpp"
#include "kerrkick/config.hpp"
#include "kerrkick/entanglement.hpp"
#include "kerrkick/errors.hpp"
#include "kerrkick/propagation.hpp"

namespace kerrkick {

inline constexpr std::string_view kRecordHeader =
    "k,P00,P01,P10,P11,leakage,concurrence,F_B1,F_B2,F_B3,F_B4";
inline constexpr std::string_view kCompareHeaderSuffix = ",A00,A01,A10,A11,dP_max";

inline std::string format_csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);  // + 0.0 folds -0 into 0
  return buf;
}

inline void write_record(std::ostream& os, const TrajectoryRecord& r) {
  os << r.k;
  for (double p : r.probs) os << ',' << format_csv_number(p);
  os << ',' << format_csv_number(r.leakage) << ',' << format_csv_number(r.concurrence);
  for (double f : r.bell_fidelities) os << ',' << format_csv_number(f);
}

// Record for closed-form amplitudes; leakage is the (clamped) normalization defect.
inline TrajectoryRecord analytic_record(std::size_t k, const TruncatedState& s) {
  TrajectoryRecord r;
  r.k = k;
  r.probs = s.probabilities();
  const double n2 = s.norm_squared();
  r.leakage = std::max(0.0, 1.0 - n2);
  const double scale = 1.0 / std::sqrt(n2);
  const TruncatedState unit{s.c00 * scale, s.c01 * scale, s.c10 * scale, s.c11 * scale};
  r.concurrence = concurrence(TwoQubitDensity::pure(unit));
  r.bell_fidelities = bell_fidelities(unit);
  return r;
}

namespace detail {

inline void note_analytic_caveats(const SystemParams& p, std::ostream& log) {
  if (p.alpha.imag() != 0.0 || p.epsilon.imag() != 0.0) {
    log << "warning: closed-form amplitudes use |alpha| and |epsilon|; complex phases are ignored\n";
  }
  if (std::abs(p.epsilon) * p.T <= kSingularCouplingThreshold) {
    log << "note: |epsilon T| <= " << kSingularCouplingThreshold
        << "; using the uncoupled formulas c00 = cos(k alpha), c10 = -i sin(k alpha)\n";
  }
}

struct ScanRow {
  double value = 0.0;
  double max_concurrence = 0.0;
  std::size_t k_at_max = 0;
  double max_leakage = 0.0;
};

inline ScanRow scan_point(SystemParams p, ScanParam which, double value, std::size_t n_kicks, Ordering ordering) {
  switch (which) {
    case ScanParam::Alpha: p.alpha = value; break;
    case ScanParam::Epsilon: p.epsilon = value; break;
    case ScanParam::T: p.T = value; break;
  }
  const Trajectory traj = evolve(p, vacuum(p.dims), n_kicks, ordering);
  ScanRow row{value, -1.0, 0, 0.0};
  for (const auto& r : traj.records) {
    if (r.concurrence > row.max_concurrence) {
      row.max_concurrence = r.concurrence;
      row.k_at_max = r.k;
    }
    row.max_leakage = std::max(row.max_leakage, r.leakage);
  }
  return row;
}

}  // namespace detail

inline void run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const SystemParams& p = cfg.params;
  switch (cfg.mode) {
    case Mode::Simulate: {
      const Trajectory traj = evolve(p, vacuum(p.dims), cfg.n_kicks, cfg.ordering);
      out << kRecordHeader << '\n';
      for (const auto& r : traj.records) {
        write_record(out, r);
        out << '\n';
      }
      break;
    }
    case Mode::Analytic: {
      detail::note_analytic_caveats(p, log);
      out << kRecordHeader << '\n';
      for (std::size_t k = 0; k <= cfg.n_kicks; ++k) {
        write_record(out, analytic_record(k, analytic_amplitudes(static_cast<long long>(k), p)));
        out << '\n';
      }
      break;
    }
    case Mode::Compare: {
      detail::note_analytic_caveats(p, log);
      const Trajectory traj = evolve(p, vacuum(p.dims), cfg.n_kicks, cfg.ordering);
      out << kRecordHeader << kCompareHeaderSuffix << '\n';
      for (const auto& r : traj.records) {
        const auto pa = analytic_amplitudes(static_cast<long long>(r.k), p).probabilities();
        double dp = 0.0;
        for (std::size_t i = 0; i < 4; ++i) dp = std::max(dp, std::abs(r.probs[i] - pa[i]));
        write_record(out, r);
        for (double a : pa) out << ',' << format_csv_number(a);
        out << ',' << format_csv_number(dp) << '\n';
      }
      break;
    }
    case Mode::Scan: {
      if (!cfg.scan) throw ConfigError("mode = scan without a scan specification");
      const ScanSpec& s = *cfg.scan;
      const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
      out << to_string(s.param) << ",max_concurrence,k_at_max,max_leakage\n";
      for (std::size_t first = 0; first < s.steps; first += width) {
        std::vector<std::future<detail::ScanRow>> jobs;
        for (std::size_t i = first; i < std::min(s.steps, first + width); ++i) {
          jobs.push_back(std::async(std::launch::async, detail::scan_point, p, s.param, s.value(i), cfg.n_kicks,
                                    cfg.ordering));
        }
        for (auto& job : jobs) {
          const auto row = job.get();
          out << format_csv_number(row.value) << ',' << format_csv_number(row.max_concurrence) << ','
              << row.k_at_max << ',' << format_csv_number(row.max_leakage) << '\n';
        }
      }
      break;
    }
  }
}

// Runs and writes to cfg.output ('-' is `fallback`).
inline void run_to_output(const RunConfig& cfg, std::ostream& fallback, std::ostream& log) {
  if (cfg.output == "-") {
    run(cfg, fallback, log);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + cfg.output + "'");
  run(cfg, file, log);
  file.flush();
  if (!file) throw Error("failed writing output file '" + cfg.output + "'");
}

}  // namespace kerrkick
