#pragma once

#include <ostream>
#include <span>
#include <string>

namespace stefanctl {

/// One diagnostics row of a run. The first 17 fields are the CSV schema,
/// in column order; the remaining fields are in-memory extras used by the
/// check layer.
struct TraceRecord {
  double t = 0.0;
  double s = 0.0;
  double s_dot = 0.0;
  double q_c = 0.0;
  double q_c_predicted = 0.0;
  double energy_e = 0.0;
  double energy_predicted = 0.0;
  double l2_sq = 0.0;
  double h1_sq = 0.0;
  double x_sq = 0.0;
  double v1 = 0.0;
  double v = 0.0;
  double envelope_bound = 0.0;
  bool flag_qc = true;
  bool flag_sdot = true;
  bool flag_band = true;
  bool flag_temp = true;

  // Extras (not part of the CSV schema).
  double min_u = 0.0;
  double w_interface_abs = 0.0;  ///< |w| at the interface node
  double wx_origin_abs = 0.0;    ///< |w_x| at x = 0, one-sided difference
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// Writes the header plus one row per record. Throws DivergenceError if a
/// non-finite value would be written.
void write_trace_csv(std::ostream& os, std::span<const TraceRecord> records);

}  // namespace stefanctl
