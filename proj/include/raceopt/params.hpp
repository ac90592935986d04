#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace raceopt {

// Physical and model constants of the car. Field names follow the usual
// bicycle-model symbols; see data/params/default.cfg for the shipped set.
struct CarParams {
  double m = 190.0;     // mass [kg]
  double I_z = 110.0;   // yaw inertia [kg m^2]
  double l_F = 0.765;   // CoG to front axle [m]
  double l_R = 0.765;   // CoG to rear axle [m]
  double L_c = 2.9;     // car length [m]
  double W_c = 1.4;     // car width [m]
  double g = 9.81;      // gravity [m/s^2]

  // Simplified Pacejka lateral tire model, D acts as friction coefficient.
  double B_F = 9.6;
  double C_F = 1.5;
  double D_F = 1.3;
  double B_R = 9.6;
  double C_R = 1.5;
  double D_R = 1.3;

  double C_m = 2300.0;  // motor gain [N per unit driver command]
  double C_r0 = 50.0;   // rolling resistance [N]
  double C_r2 = 0.35;   // drag coefficient [N s^2/m^2]
  double p_tv = 250.0;  // torque vectoring gain [N m s/rad]

  double wheelbase() const { return l_F + l_R; }
  double normal_load_front() const { return l_R / (l_F + l_R) * m * g; }
  double normal_load_rear() const { return l_F / (l_F + l_R) * m * g; }

  // Throws ValidationError naming the violated invariant.
  void validate() const;
};

// Path/input constraint parameters shared by both optimization levels.
struct ConstraintParams {
  double rho_long = 1.2;    // friction ellipse shape
  double lambda = 0.95;     // combined force scale
  double delta_max = 0.40;  // steering angle bound [rad]
  double T_max = 1.0;       // driver command bound
  double d_delta_max = 2.0; // steering rate bound [rad/s]
  double d_T_max = 3.0;     // driver command rate bound [1/s]
  double v_x_max = 17.0;    // velocity cap [m/s]

  void validate() const;
};

// Flat key = value parameter file. '#' starts a comment. Every key must be
// consumed by one of the typed loaders; leftover keys are an error, as are
// missing required keys.
class ParamFile {
 public:
  static ParamFile load(const std::filesystem::path& path);
  static ParamFile from_string(const std::string& text, const std::string& origin = "<string>");

  double require(const std::string& key);
  double optional(const std::string& key, double fallback);
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  // Throws ValidationError listing any key that no loader consumed.
  void finish() const;

 private:
  std::string origin_;
  std::map<std::string, double> values_;
  std::set<std::string> consumed_;
};

CarParams load_car_params(ParamFile& file);
ConstraintParams load_constraint_params(ParamFile& file);

void save_params(const std::filesystem::path& path, const CarParams& car,
                 const ConstraintParams& cons);

}  // namespace raceopt
