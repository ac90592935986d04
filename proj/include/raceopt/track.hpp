#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "raceopt/errors.hpp"

namespace raceopt {

struct TrackPoint {
  double x = 0.0;
  double y = 0.0;
  double w_left = 0.0;
  double w_right = 0.0;
};

// Raw track description: an ordered centerline polyline with per-point track
// widths. For closed tracks the closing segment (last -> first) is implied.
struct TrackSpec {
  std::vector<TrackPoint> points;
  bool closed = true;

  void validate() const;  // throws ValidationError
};

namespace detail {

// C2 cubic spline through a scalar sequence, periodic or natural, over
// arbitrary strictly increasing knots.
class CubicSpline1d {
 public:
  CubicSpline1d() = default;
  CubicSpline1d(std::vector<double> knots, std::vector<double> values, bool periodic,
                double period = 0.0);

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

 private:
  int segment(double& t) const;

  std::vector<double> t_, y_, m_;  // knots, values, second derivatives
  bool periodic_ = false;
  double period_ = 0.0;
};

}  // namespace detail

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

struct CurvilinearPose {
  double s = 0.0;
  double n = 0.0;
  double mu = 0.0;
};

// Arc-length parametrized reference path with curvature and lateral width
// bounds sampled on a uniform grid. Immutable after construction.
class Track {
 public:
  double length() const { return length_; }
  bool closed() const { return closed_; }
  double grid_spacing() const { return grid_ds_; }

  // Linear interpolation on the uniform grid (periodic wrap for closed
  // tracks); this is what the integrators and the NLP assembly consume.
  double kappa(double s) const;
  double width_left(double s) const;
  double width_right(double s) const;

  // Exact spline evaluation (full precision, not grid interpolation).
  Eigen::Vector2d position(double s) const;
  Eigen::Vector2d tangent(double s) const;   // unit tangent
  Eigen::Vector2d normal(double s) const;    // unit left normal
  double heading(double s) const;

  Pose from_curvilinear(double s, double n, double mu) const;
  // Local projection seeded near hint_s. Throws ProjectionError when the
  // point is outside the projection corridor.
  CurvilinearPose to_curvilinear(double x, double y, double heading, double hint_s) const;
  // Global projection (grid scan + refinement), for initialization.
  CurvilinearPose to_curvilinear_global(double x, double y, double heading) const;

  double wrap_s(double s) const;

  // Arc-length positions of the originating centerline points.
  const std::vector<double>& knot_arclengths() const { return knot_s_; }
  const TrackSpec& spec() const { return spec_; }

  const std::vector<double>& grid_kappa() const { return kappa_grid_; }
  const std::vector<double>& grid_width_left() const { return w_left_grid_; }
  const std::vector<double>& grid_width_right() const { return w_right_grid_; }
  // Grid node positions s_j = j * grid_spacing(), j = 0 .. grid_size()-1.
  int grid_size() const { return static_cast<int>(kappa_grid_.size()); }

 private:
  friend Track build_track(const TrackSpec& spec, double grid_ds);
  friend class RaceLinePath;

  double grid_interp(const std::vector<double>& values, double s) const;
  double arclength_to_param(double s) const;

  TrackSpec spec_;
  bool closed_ = true;
  double length_ = 0.0;
  double grid_ds_ = 0.1;

  detail::CubicSpline1d spline_x_, spline_y_;  // parametrized by chord parameter t
  detail::CubicSpline1d spline_wl_, spline_wr_;
  std::vector<double> knot_t_;  // chord parameter at centerline points
  std::vector<double> knot_s_;  // arc length at centerline points
  double param_period_ = 0.0;

  std::vector<double> kappa_grid_, w_left_grid_, w_right_grid_;
  std::vector<double> grid_t_;  // chord parameter at grid nodes (projection / eval seeds)
};

// Fits a twice-differentiable (periodic, for closed specs) cubic spline
// through the centerline, re-parametrizes it by arc length via adaptive
// quadrature, and resamples curvature and widths on a uniform grid of
// spacing <= grid_ds.
Track build_track(const TrackSpec& spec, double grid_ds = 0.1);

// Reference path produced from an optimized lap: track-shaped geometry of
// the ideal line plus the velocity profile over its own arc length.
class RaceLinePath {
 public:
  RaceLinePath() = default;
  RaceLinePath(Track geometry, std::vector<double> v_at_knots);

  const Track& geometry() const { return geometry_; }
  // Velocity profile V(s') by linear interpolation over the new arc length.
  double v_ref(double s) const;
  const std::vector<double>& v_at_knots() const { return v_knots_; }

 private:
  Track geometry_;
  std::vector<double> v_knots_;  // at geometry().knot_arclengths()
  std::vector<double> v_grid_;   // resampled on the uniform grid
};

struct RaceLineSample {
  double s = 0.0;   // arc length on the original track
  double n = 0.0;   // lateral offset of the optimized line
  double mu = 0.0;  // local heading of the optimized line
  double v_x = 0.0; // longitudinal speed
};

// Maps periodic optimized-line samples to global coordinates, fits a new
// closed reference path through them, re-expresses the original track's
// lateral bounds relative to the new path and resamples the velocity
// profile over the new arc length.
RaceLinePath reparametrize_raceline(const Track& track, const std::vector<RaceLineSample>& samples,
                                    double grid_ds = 0.1);

// --- file I/O ---------------------------------------------------------------

TrackSpec load_track_spec(const std::filesystem::path& path);
void save_track_spec(const std::filesystem::path& path, const TrackSpec& spec);

void save_raceline_path(const std::filesystem::path& path, const RaceLinePath& line);
RaceLinePath load_raceline_path(const std::filesystem::path& path, double grid_ds = 0.1);

double wrap_angle(double a);  // to (-pi, pi]

}  // namespace raceopt
