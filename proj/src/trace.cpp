#include "stefanctl/trace.hpp"

#include <charconv>
#include <cmath>

#include "stefanctl/errors.hpp"

namespace stefanctl {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_trace_csv(std::ostream& os, std::span<const TraceRecord> records) {
  os << "t,s,s_dot,q_c,q_c_predicted,energy_E,energy_predicted,l2_sq,h1_sq,"
        "x_sq,v1,v,envelope_bound,flag_qc,flag_sdot,flag_band,flag_temp\n";
  for (const auto& r : records) {
    const double vals[] = {r.t,       r.s,  r.s_dot, r.q_c, r.q_c_predicted,
                           r.energy_e, r.energy_predicted, r.l2_sq, r.h1_sq,
                           r.x_sq,    r.v1, r.v,     r.envelope_bound};
    for (double v : vals) {
      if (!std::isfinite(v)) {
        throw DivergenceError("non-finite value in trace record", r.t);
      }
    }
    for (double v : vals) os << format_double(v) << ',';
    os << (r.flag_qc ? 1 : 0) << ',' << (r.flag_sdot ? 1 : 0) << ','
       << (r.flag_band ? 1 : 0) << ',' << (r.flag_temp ? 1 : 0) << '\n';
  }
}

}  // namespace stefanctl
