#include "raceopt/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "raceopt/errors.hpp"

namespace raceopt {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("parameter invariant violated: " + what);
}

}  // namespace

void CarParams::validate() const {
  check(m > 0, "m > 0");
  check(I_z > 0, "I_z > 0");
  check(l_F > 0, "l_F > 0");
  check(l_R > 0, "l_R > 0");
  check(L_c > 0, "L_c > 0");
  check(W_c > 0, "W_c > 0");
  check(g > 0, "g > 0");
  check(D_F > 0, "D_F > 0");
  check(D_R > 0, "D_R > 0");
  check(C_m > 0, "C_m > 0");
  check(C_r0 >= 0, "C_r0 >= 0");
  check(C_r2 >= 0, "C_r2 >= 0");
  check(p_tv >= 0, "p_tv >= 0");
  for (double v : {m, I_z, l_F, l_R, L_c, W_c, g, B_F, C_F, D_F, B_R, C_R, D_R, C_m, C_r0, C_r2, p_tv}) {
    check(std::isfinite(v), "all car parameters finite");
  }
}

void ConstraintParams::validate() const {
  check(rho_long > 0, "rho_long > 0");
  check(lambda > 0, "lambda > 0");
  check(delta_max > 0, "delta_max > 0");
  check(T_max > 0, "T_max > 0");
  check(d_delta_max > 0, "d_delta_max > 0");
  check(d_T_max > 0, "d_T_max > 0");
  check(v_x_max > 0, "v_x_max > 0");
}

ParamFile ParamFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parameter file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path.string());
}

ParamFile ParamFile::from_string(const std::string& text, const std::string& origin) {
  ParamFile file;
  file.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": empty key");
    }
    if (file.values_.count(key)) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    try {
      size_t used = 0;
      const double parsed = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      file.values_[key] = parsed;
    } catch (const std::exception&) {
      throw ValidationError(origin + ":" + std::to_string(lineno) + ": bad numeric value '" + val +
                            "' for key '" + key + "'");
    }
  }
  return file;
}

double ParamFile::require(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end()) {
    throw ValidationError(origin_ + ": missing required key '" + key + "'");
  }
  consumed_.insert(key);
  return it->second;
}

double ParamFile::optional(const std::string& key, double fallback) {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  consumed_.insert(key);
  return it->second;
}

void ParamFile::finish() const {
  std::string extra;
  for (const auto& [key, value] : values_) {
    (void)value;
    if (!consumed_.count(key)) {
      if (!extra.empty()) extra += ", ";
      extra += key;
    }
  }
  if (!extra.empty()) {
    throw ValidationError(origin_ + ": unknown keys: " + extra);
  }
}

CarParams load_car_params(ParamFile& file) {
  CarParams p;
  p.m = file.require("m");
  p.I_z = file.require("I_z");
  p.l_F = file.require("l_F");
  p.l_R = file.require("l_R");
  p.L_c = file.require("L_c");
  p.W_c = file.require("W_c");
  p.g = file.require("g");
  p.B_F = file.require("B_F");
  p.C_F = file.require("C_F");
  p.D_F = file.require("D_F");
  p.B_R = file.require("B_R");
  p.C_R = file.require("C_R");
  p.D_R = file.require("D_R");
  p.C_m = file.require("C_m");
  p.C_r0 = file.require("C_r0");
  p.C_r2 = file.require("C_r2");
  p.p_tv = file.require("p_tv");
  p.validate();
  return p;
}

ConstraintParams load_constraint_params(ParamFile& file) {
  ConstraintParams c;
  c.rho_long = file.require("rho_long");
  c.lambda = file.require("lambda");
  c.delta_max = file.require("delta_max");
  c.T_max = file.require("T_max");
  c.d_delta_max = file.require("d_delta_max");
  c.d_T_max = file.require("d_T_max");
  c.v_x_max = file.require("v_x_max");
  c.validate();
  return c;
}

void save_params(const std::filesystem::path& path, const CarParams& car,
                 const ConstraintParams& cons) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write parameter file: " + path.string());
  out.precision(17);
  out << "# car\n";
  out << "m = " << car.m << "\nI_z = " << car.I_z << "\nl_F = " << car.l_F << "\nl_R = " << car.l_R
      << "\nL_c = " << car.L_c << "\nW_c = " << car.W_c << "\ng = " << car.g << "\n";
  out << "B_F = " << car.B_F << "\nC_F = " << car.C_F << "\nD_F = " << car.D_F << "\nB_R = " << car.B_R
      << "\nC_R = " << car.C_R << "\nD_R = " << car.D_R << "\n";
  out << "C_m = " << car.C_m << "\nC_r0 = " << car.C_r0 << "\nC_r2 = " << car.C_r2
      << "\np_tv = " << car.p_tv << "\n";
  out << "# constraints\n";
  out << "rho_long = " << cons.rho_long << "\nlambda = " << cons.lambda
      << "\ndelta_max = " << cons.delta_max << "\nT_max = " << cons.T_max
      << "\nd_delta_max = " << cons.d_delta_max << "\nd_T_max = " << cons.d_T_max
      << "\nv_x_max = " << cons.v_x_max << "\n";
}

}  // namespace raceopt
