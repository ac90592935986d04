#pragma once

// Curvilinear bicycle model: simplified Pacejka lateral tire forces, linear
// drivetrain with rolling resistance and drag, torque-vectoring yaw moment.
// The model functions are templated on the scalar type so the same code path
// produces values, Jacobians and Hessians for the NLP stage functions.

#include <Eigen/Core>

#include "raceopt/ad.hpp"
#include "raceopt/errors.hpp"
#include "raceopt/params.hpp"

namespace raceopt {

class Track;

// Guard for |1 - n*kappa|: the car sits at the instantaneous center of
// curvature below this.
inline constexpr double kCurvatureSingularityEps = 1e-6;
// Guard for sdot in the space-domain transformation [m/s].
inline constexpr double kSdotEps = 1e-3;

struct TimeState {
  double s = 0.0;      // progress [m]
  double n = 0.0;      // lateral deviation [m]
  double mu = 0.0;     // local heading [rad]
  double v_x = 0.0;    // longitudinal velocity [m/s]
  double v_y = 0.0;    // lateral velocity [m/s]
  double r = 0.0;      // yaw rate [rad/s]
  double delta = 0.0;  // steering angle [rad]
  double T_cmd = 0.0;  // driver command [-1, 1]

  static constexpr int kDim = 8;
  Eigen::Matrix<double, 8, 1> to_vector() const;
  static TimeState from_vector(const Eigen::Matrix<double, 8, 1>& v);
};

// TimeState without the progress coordinate.
struct SpatialState {
  double n = 0.0;
  double mu = 0.0;
  double v_x = 0.0;
  double v_y = 0.0;
  double r = 0.0;
  double delta = 0.0;
  double T_cmd = 0.0;

  static constexpr int kDim = 7;
  Eigen::Matrix<double, 7, 1> to_vector() const;
  static SpatialState from_vector(const Eigen::Matrix<double, 7, 1>& v);

  TimeState with_progress(double s) const;
  static SpatialState drop_progress(const TimeState& x);
};

struct Input {
  double d_delta = 0.0;  // steering rate [rad/s]
  double d_T = 0.0;      // driver command rate [1/s]
};

struct TireForces {
  double alpha_F = 0.0;  // front slip angle [rad]
  double alpha_R = 0.0;  // rear slip angle [rad]
  double F_yF = 0.0;     // front lateral force [N]
  double F_yR = 0.0;     // rear lateral force [N]
  double F_NF = 0.0;     // front normal load [N]
  double F_NR = 0.0;     // rear normal load [N]
  double F_x = 0.0;      // longitudinal drivetrain force [N]
  double F_M = 0.0;      // motor force [N]
  double M_tv = 0.0;     // torque vectoring moment [N m]
};

// --- templated core -------------------------------------------------------

template <typename T>
struct BodyForcesT {
  T alpha_F, alpha_R, F_yF, F_yR, F_x, F_M, M_tv;
};

template <typename T>
BodyForcesT<T> tire_and_drivetrain_t(const T& v_x, const T& v_y, const T& r, const T& delta,
                                     const T& T_cmd, const CarParams& p) {
  using ad::atan;
  using ad::sin;
  using ad::sq;
  using ad::tan;
  if (ad::value_of(v_x) <= 0.0) {
    throw DomainError("tire model requires v_x > 0");
  }
  BodyForcesT<T> f;
  f.alpha_F = atan((v_y + p.l_F * r) / v_x) - delta;
  f.alpha_R = atan((v_y - p.l_R * r) / v_x);
  f.F_yF = p.normal_load_front() * p.D_F * sin(p.C_F * atan(p.B_F * f.alpha_F));
  f.F_yR = p.normal_load_rear() * p.D_R * sin(p.C_R * atan(p.B_R * f.alpha_R));
  f.F_M = p.C_m * T_cmd;
  f.F_x = f.F_M - p.C_r0 - p.C_r2 * sq(v_x);
  const T r_target = tan(delta) * v_x / p.wheelbase();
  f.M_tv = p.p_tv * (r_target - r);
  return f;
}

template <typename T>
T sdot_t(const T& n, const T& mu, const T& v_x, const T& v_y, double kappa) {
  using ad::cos;
  using ad::sin;
  const T denom = 1.0 - n * kappa;
  if (std::abs(ad::value_of(denom)) < kCurvatureSingularityEps) {
    throw SingularityError("car at instantaneous center of curvature (1 - n*kappa ~ 0)");
  }
  return (v_x * cos(mu) - v_y * sin(mu)) / denom;
}

// Time derivative of the seven non-progress states; sdot is returned
// separately so callers can form the full 8-component derivative or divide
// by it for the space-domain model. x = (n, mu, v_x, v_y, r, delta, T).
template <typename T>
void body_dynamics_t(const T* x, const T* u, double kappa, const CarParams& p, T* dxdt, T* sdot_out) {
  using ad::cos;
  using ad::sin;
  const T& n = x[0];
  const T& mu = x[1];
  const T& v_x = x[2];
  const T& v_y = x[3];
  const T& r = x[4];
  const T& delta = x[5];
  const T& T_cmd = x[6];

  const BodyForcesT<T> f = tire_and_drivetrain_t(v_x, v_y, r, delta, T_cmd, p);
  const T sdot = sdot_t(n, mu, v_x, v_y, kappa);

  dxdt[0] = v_x * sin(mu) + v_y * cos(mu);
  dxdt[1] = r - kappa * sdot;
  dxdt[2] = (f.F_x - f.F_yF * sin(delta) + p.m * v_y * r) / p.m;
  dxdt[3] = (f.F_yR + f.F_yF * cos(delta) - p.m * v_x * r) / p.m;
  dxdt[4] = (f.F_yF * p.l_F * cos(delta) - f.F_yR * p.l_R + f.M_tv) / p.I_z;
  dxdt[5] = u[0];
  dxdt[6] = u[1];
  if (sdot_out) *sdot_out = sdot;
}

// Space derivative per the 1/sdot reformulation; the progress component
// (identically 1) is dropped. Errors if sdot <= kSdotEps.
template <typename T>
void spatial_dynamics_t(const T* x, const T* u, double kappa, const CarParams& p, T* dxds) {
  T dxdt[7];
  T sdot;
  body_dynamics_t(x, u, kappa, p, dxdt, &sdot);
  if (ad::value_of(sdot) <= kSdotEps) {
    throw SingularityError("space-domain dynamics singular: sdot <= eps (car stopping)");
  }
  for (int i = 0; i < 7; ++i) dxds[i] = dxdt[i] / sdot;
}

// Forward Euler step of the space-domain model with constant inputs.
template <typename T>
void step_space_euler_t(const T* x, const T* u, double kappa, double ds, const CarParams& p, T* out) {
  T dxds[7];
  spatial_dynamics_t(x, u, kappa, p, dxds);
  for (int i = 0; i < 7; ++i) out[i] = x[i] + ds * dxds[i];
}

// Classical RK4 step of the time-domain model on the seven non-progress
// states with the curvature held fixed over the step (the receding-horizon
// controller freezes kappa per stage).
template <typename T>
void step_body_rk4_frozen_kappa_t(const T* x, const T* u, double kappa, double dt,
                                  const CarParams& p, T* out) {
  T k1[7], k2[7], k3[7], k4[7], tmp[7];
  body_dynamics_t(x, u, kappa, p, k1, static_cast<T*>(nullptr));
  for (int i = 0; i < 7; ++i) tmp[i] = x[i] + (0.5 * dt) * k1[i];
  body_dynamics_t(tmp, u, kappa, p, k2, static_cast<T*>(nullptr));
  for (int i = 0; i < 7; ++i) tmp[i] = x[i] + (0.5 * dt) * k2[i];
  body_dynamics_t(tmp, u, kappa, p, k3, static_cast<T*>(nullptr));
  for (int i = 0; i < 7; ++i) tmp[i] = x[i] + dt * k3[i];
  body_dynamics_t(tmp, u, kappa, p, k4, static_cast<T*>(nullptr));
  for (int i = 0; i < 7; ++i) {
    out[i] = x[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

// Difference between dynamic and kinematic side slip, the argument of the
// slip regularization cost.
template <typename T>
T slip_mismatch_t(const T& v_x, const T& v_y, const T& delta, const CarParams& p) {
  using ad::atan;
  if (ad::value_of(v_x) <= 0.0) throw DomainError("slip cost requires v_x > 0");
  const T beta_dyn = atan(v_y / v_x);
  const T beta_kin = atan(delta * p.l_R / p.wheelbase());
  return beta_dyn - beta_kin;
}

// --- double-typed API ------------------------------------------------------

TireForces tire_and_drivetrain(const TimeState& x, const CarParams& p);
TireForces tire_and_drivetrain(const SpatialState& x, const CarParams& p);

// Full 8-component time derivative (sdot first) at a given curvature.
Eigen::Matrix<double, 8, 1> dynamics_time(const TimeState& x, const Input& u, double kappa,
                                          const CarParams& p);

// 7-component space derivative (progress row dropped).
Eigen::Matrix<double, 7, 1> dynamics_space(const SpatialState& x, const Input& u, double kappa,
                                           const CarParams& p);

// RK4 step of the full time-domain model; the curvature is re-evaluated from
// the track at each RK4 stage's progress.
TimeState step_time_rk4(const TimeState& x, const Input& u, const Track& track, double dt,
                        const CarParams& p);

SpatialState step_space_euler(const SpatialState& x, const Input& u, double kappa, double ds,
                              const CarParams& p);

double slip_cost(const SpatialState& x, const CarParams& p, double q_beta);
double slip_cost(const TimeState& x, const CarParams& p, double q_beta);

}  // namespace raceopt
