#pragma once

#include <vector>

namespace sgi {

struct ForceSegment {
  double t_start = 0;  // [s]
  double t_end = 0;    // [s]
  double force = 0;    // [N]
};

/// Piecewise-constant spin-dependent force f0(t) on [0, total_time].
/// Segments are contiguous, ordered and cover the whole interval.
class ForceProfile {
 public:
  explicit ForceProfile(std::vector<ForceSegment> segments);

  /// Four equal quarters with signs (+, -, -, +): both the centre offset and
  /// the centre velocity of each branch return to zero at the end.
  static ForceProfile balanced4(double force, double total_time);
  static ForceProfile constant(double force, double total_time);

  const std::vector<ForceSegment>& segments() const { return segments_; }
  double total_time() const { return segments_.back().t_end; }

  /// f0(t); at a boundary the later segment wins.
  double force_at(double t) const;

  /// int_0^T f0 dt.
  double impulse() const;
  /// int_0^T f0(t') (T - t') dt' = m times the undamped end displacement.
  double undamped_displacement_moment() const;
  /// Both of the above vanish, relative to sum |f| T (and sum |f| T^2).
  bool is_balanced(double relative_tolerance = 1e-12) const;

  bool contains(double t) const { return t >= 0 && t <= total_time(); }

 private:
  std::vector<ForceSegment> segments_;
};

}  // namespace sgi
