#include "raceopt/vehicle_model.hpp"

#include "raceopt/track.hpp"

namespace raceopt {

Eigen::Matrix<double, 8, 1> TimeState::to_vector() const {
  Eigen::Matrix<double, 8, 1> v;
  v << s, n, mu, v_x, v_y, r, delta, T_cmd;
  return v;
}

TimeState TimeState::from_vector(const Eigen::Matrix<double, 8, 1>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

Eigen::Matrix<double, 7, 1> SpatialState::to_vector() const {
  Eigen::Matrix<double, 7, 1> v;
  v << n, mu, v_x, v_y, r, delta, T_cmd;
  return v;
}

SpatialState SpatialState::from_vector(const Eigen::Matrix<double, 7, 1>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
}

TimeState SpatialState::with_progress(double s) const {
  return {s, n, mu, v_x, v_y, r, delta, T_cmd};
}

SpatialState SpatialState::drop_progress(const TimeState& x) {
  return {x.n, x.mu, x.v_x, x.v_y, x.r, x.delta, x.T_cmd};
}

namespace {

TireForces to_tire_forces(const BodyForcesT<double>& f, const CarParams& p) {
  TireForces out;
  out.alpha_F = f.alpha_F;
  out.alpha_R = f.alpha_R;
  out.F_yF = f.F_yF;
  out.F_yR = f.F_yR;
  out.F_NF = p.normal_load_front();
  out.F_NR = p.normal_load_rear();
  out.F_x = f.F_x;
  out.F_M = f.F_M;
  out.M_tv = f.M_tv;
  return out;
}

}  // namespace

TireForces tire_and_drivetrain(const TimeState& x, const CarParams& p) {
  return to_tire_forces(tire_and_drivetrain_t(x.v_x, x.v_y, x.r, x.delta, x.T_cmd, p), p);
}

TireForces tire_and_drivetrain(const SpatialState& x, const CarParams& p) {
  return to_tire_forces(tire_and_drivetrain_t(x.v_x, x.v_y, x.r, x.delta, x.T_cmd, p), p);
}

Eigen::Matrix<double, 8, 1> dynamics_time(const TimeState& x, const Input& u, double kappa,
                                          const CarParams& p) {
  const double body[7] = {x.n, x.mu, x.v_x, x.v_y, x.r, x.delta, x.T_cmd};
  const double rates[2] = {u.d_delta, u.d_T};
  double dxdt[7];
  double sdot;
  body_dynamics_t(body, rates, kappa, p, dxdt, &sdot);
  Eigen::Matrix<double, 8, 1> out;
  out << sdot, dxdt[0], dxdt[1], dxdt[2], dxdt[3], dxdt[4], dxdt[5], dxdt[6];
  return out;
}

Eigen::Matrix<double, 7, 1> dynamics_space(const SpatialState& x, const Input& u, double kappa,
                                           const CarParams& p) {
  const double body[7] = {x.n, x.mu, x.v_x, x.v_y, x.r, x.delta, x.T_cmd};
  const double rates[2] = {u.d_delta, u.d_T};
  double dxds[7];
  spatial_dynamics_t(body, rates, kappa, p, dxds);
  Eigen::Matrix<double, 7, 1> out;
  for (int i = 0; i < 7; ++i) out[i] = dxds[i];
  return out;
}

TimeState step_time_rk4(const TimeState& x, const Input& u, const Track& track, double dt,
                        const CarParams& p) {
  if (dt <= 0.0) throw ValidationError("step_time_rk4 requires dt > 0");
  using Vec8 = Eigen::Matrix<double, 8, 1>;
  auto f = [&](const Vec8& v) {
    return dynamics_time(TimeState::from_vector(v), u, track.kappa(v[0]), p);
  };
  const Vec8 x0 = x.to_vector();
  const Vec8 k1 = f(x0);
  const Vec8 k2 = f(x0 + 0.5 * dt * k1);
  const Vec8 k3 = f(x0 + 0.5 * dt * k2);
  const Vec8 k4 = f(x0 + dt * k3);
  return TimeState::from_vector(x0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

SpatialState step_space_euler(const SpatialState& x, const Input& u, double kappa, double ds,
                              const CarParams& p) {
  const double body[7] = {x.n, x.mu, x.v_x, x.v_y, x.r, x.delta, x.T_cmd};
  const double rates[2] = {u.d_delta, u.d_T};
  double out[7];
  step_space_euler_t(body, rates, kappa, ds, p, out);
  Eigen::Matrix<double, 7, 1> v;
  for (int i = 0; i < 7; ++i) v[i] = out[i];
  return SpatialState::from_vector(v);
}

double slip_cost(const SpatialState& x, const CarParams& p, double q_beta) {
  const double d = slip_mismatch_t(x.v_x, x.v_y, x.delta, p);
  return q_beta * d * d;
}

double slip_cost(const TimeState& x, const CarParams& p, double q_beta) {
  const double d = slip_mismatch_t(x.v_x, x.v_y, x.delta, p);
  return q_beta * d * d;
}

}  // namespace raceopt
