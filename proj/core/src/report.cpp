#include "sgi/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace sgi::report {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_trace_csv(std::ostream& out, const CoherenceTrace& trace) {
  out << "t,z_plus,z_minus,sigma_tilde,h,coherence,sx\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out << format_number(trace.times[i]) << ',' << format_number(trace.z_plus[i]) << ','
        << format_number(trace.z_minus[i]) << ',' << format_number(trace.width[i]) << ','
        << format_number(trace.h[i]) << ',' << format_number(trace.coherence[i]) << ','
        << format_number(trace.sx[i]) << '\n';
  }
}

void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows) {
  out << "quantity,value,unit\n";
  for (const auto& r : rows) out << r.name << ',' << format_number(r.value) << ',' << r.unit << '\n';
}

void write_estimate_table(std::ostream& out, const std::vector<EstimateRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name;
    if (r.unit == "bool") {
      out << (r.value != 0 ? "true" : "false") << '\n';
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.6e", r.value);
      out << buf << "  " << r.unit << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepRow>& rows) {
  for (const auto& a : axes) out << a.name << ',';
  out << "tau,coherence_final\n";
  for (const auto& r : rows) {
    for (double v : r.axis_values) out << format_number(v) << ',';
    out << (r.decoherence_time ? format_number(*r.decoherence_time) : "inf") << ','
        << format_number(r.final_coherence) << '\n';
  }
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows) {
  out << "check,achieved,tolerance,status,note\n";
  for (const auto& r : rows) {
    out << r.name << ',' << format_number(r.achieved) << ',' << format_number(r.tolerance) << ','
        << (r.passed ? "pass" : "fail") << ",\"" << r.note << "\"\n";
  }
}

void write_units(std::ostream& out) {
  out << "# SI units of every numeric column\n"
         "t            s\n"
         "z_plus       m\n"
         "z_minus      m\n"
         "sigma_tilde  m\n"
         "h            1\n"
         "coherence    1\n"
         "sx           1   (<S_x> in units of hbar/2, relative to t = 0)\n"
         "tau          s   (inf when h stays above 1/e up to t_max)\n"
         "coherence_final 1\n"
         "temperature  K\n"
         "ring_width   m\n"
         "beam_velocity m/s\n"
         "eta_scale    1\n"
         "gamma_scale  1\n";
}

void write_trace_svg(std::ostream& out, const CoherenceTrace& trace) {
  constexpr double w = 640, h = 400, left = 60, right = 20, top = 20, bottom = 50;
  const double t_end = trace.times.empty() ? 1.0 : std::max(trace.times.back(), 1e-300);
  auto px = [&](double t) { return left + (w - left - right) * t / t_end; };
  auto py = [&](double v) {
    v = std::clamp(v, 0.0, 1.05);
    return top + (h - top - bottom) * (1.05 - v) / 1.05;
  };
  auto polyline = [&](const std::vector<double>& ys, const char* colour) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < ys.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(trace.times[i]), py(ys[i]));
      out << buf;
    }
    out << "\"/>\n";
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << w - right << "\" y2=\""
      << py(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  for (double v : {0.0, 0.5, 1.0}) {
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(v) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << v << "</text>\n";
  }
  out << "<text x=\"" << (w + left) / 2 << "\" y=\"" << h - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">t [s], 0 to " << format_number(t_end)
      << "</text>\n";
  polyline(trace.h, "#c0392b");
  polyline(trace.coherence, "#2c3e50");
  out << "<text x=\"" << w - 120 << "\" y=\"" << top + 14
      << "\" font-size=\"12\" fill=\"#c0392b\">h(t)</text>\n";
  out << "<text x=\"" << w - 120 << "\" y=\"" << top + 30
      << "\" font-size=\"12\" fill=\"#2c3e50\">coherence</text>\n</svg>\n";
}

}  // namespace sgi::report
