#pragma once

#include <Eigen/Core>

#include <vector>

namespace gnnmpc {

using PointState = Eigen::Matrix<double, 6, 1>;  // position, velocity

/// center + R (cos wt, sin wt, 0), w = 2 pi / period.
PointState reference_circle(const Eigen::Vector3d& center, double radius, double period, double t);

/// Lemniscate of Gerono: center + a (sin wt, sin wt cos wt, 0).
PointState reference_figure_eight(const Eigen::Vector3d& center, double lobe, double period, double t);

enum class CurveKind { Constant, Circle, FigureEight };

/// Horizontal end-effector curve. With lift_radius > 0 the curve is projected
/// vertically onto the lower half of the sphere of that radius around
/// lift_center, i.e. the surface an inextensible hanging chain can reach; the
/// center's z is then ignored.
struct CurveReference {
  CurveKind kind = CurveKind::Circle;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double size = 0.03;  // circle radius or figure-eight lobe
  double period = 4.0;
  double lift_radius = 0.0;
  Eigen::Vector3d lift_center = Eigen::Vector3d::Zero();

  void validate() const;
  PointState at(double t) const;
};

}  // namespace gnnmpc
