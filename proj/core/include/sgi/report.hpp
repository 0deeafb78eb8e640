#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sgi/density.hpp"
#include "sgi/pipeline.hpp"

namespace sgi::report {

/// 17 significant digits in scientific notation; infinities print as "inf".
std::string format_number(double v);

void write_trace_csv(std::ostream& out, const CoherenceTrace& trace);
void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows);
/// Aligned, human-readable version of the estimate rows.
void write_estimate_table(std::ostream& out, const std::vector<EstimateRow>& rows);
void write_sweep_csv(std::ostream& out, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepRow>& rows);
void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows);

/// Sidecar listing the SI unit of every column the tool writes.
void write_units(std::ostream& out);

/// Polyline plot of h and coherence against t.
void write_trace_svg(std::ostream& out, const CoherenceTrace& trace);

}  // namespace sgi::report
