#include "sgi/force_profile.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sgi/errors.hpp"

namespace sgi {

ForceProfile::ForceProfile(std::vector<ForceSegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw ParameterError("force profile needs at least one segment");
  if (segments_.front().t_start != 0.0) throw ParameterError("force profile must start at t = 0");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const ForceSegment& s = segments_[i];
    if (!(s.t_end > s.t_start) || !std::isfinite(s.t_end)) {
      throw ParameterError("force segment " + std::to_string(i) + " has non-positive duration");
    }
    if (!std::isfinite(s.force)) throw ParameterError("force segment value must be finite");
    if (i > 0 && s.t_start != segments_[i - 1].t_end) {
      throw ParameterError("force segments must be contiguous (gap or overlap before segment " +
                           std::to_string(i) + ")");
    }
  }
}

ForceProfile ForceProfile::balanced4(double force, double total_time) {
  if (!(total_time > 0)) throw ParameterError("balanced4: total time must be > 0");
  const double q = 0.25 * total_time;
  return ForceProfile({{0.0, q, force},
                       {q, 2.0 * q, -force},
                       {2.0 * q, 3.0 * q, -force},
                       {3.0 * q, total_time, force}});
}

ForceProfile ForceProfile::constant(double force, double total_time) {
  if (!(total_time > 0)) throw ParameterError("constant profile: total time must be > 0");
  return ForceProfile({{0.0, total_time, force}});
}

double ForceProfile::force_at(double t) const {
  if (!contains(t)) throw ParameterError("force_at: t outside the profile");
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    if (t >= it->t_start) return it->force;
  }
  return segments_.front().force;
}

double ForceProfile::impulse() const {
  double sum = 0;
  for (const ForceSegment& s : segments_) sum += s.force * (s.t_end - s.t_start);
  return sum;
}

double ForceProfile::undamped_displacement_moment() const {
  const double total = total_time();
  double sum = 0;
  for (const ForceSegment& s : segments_) {
    const double a = total - s.t_start;
    const double b = total - s.t_end;
    sum += s.force * 0.5 * (a * a - b * b);
  }
  return sum;
}

bool ForceProfile::is_balanced(double relative_tolerance) const {
  const double total = total_time();
  double scale = 0;
  for (const ForceSegment& s : segments_) scale += std::abs(s.force) * (s.t_end - s.t_start);
  if (scale == 0) return true;
  return std::abs(impulse()) <= relative_tolerance * scale &&
         std::abs(undamped_displacement_moment()) <= relative_tolerance * scale * total;
}

}  // namespace sgi
