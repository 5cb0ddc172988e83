#include "dsdm/environment.hpp"

#include <algorithm>
#include <cmath>

namespace dsdm {

const char* to_token(LoadKind kind) {
  switch (kind) {
    case LoadKind::Free: return "free";
    case LoadKind::FixedObstacle: return "fixed";
    case LoadKind::InertialLoad: return "inertial";
    case LoadKind::CompliantLoad: return "compliant";
  }
  return "free";
}

LoadKind load_kind_from_token(const std::string& token) {
  if (token == "free") return LoadKind::Free;
  if (token == "fixed") return LoadKind::FixedObstacle;
  if (token == "inertial") return LoadKind::InertialLoad;
  if (token == "compliant") return LoadKind::CompliantLoad;
  throw ValidationError("unknown load type '" + token +
                       "' (expected free|fixed|inertial|compliant)");
}

LoadModel LoadModel::free() { return {}; }

LoadModel LoadModel::fixed_obstacle(double contact_angle) {
  LoadModel m;
  m.kind = LoadKind::FixedObstacle;
  m.contact_angle = contact_angle;
  return m;
}

LoadModel LoadModel::inertial(double contact_angle, double load_inertia,
                              double resistive_torque) {
  LoadModel m;
  m.kind = LoadKind::InertialLoad;
  m.contact_angle = contact_angle;
  m.load_inertia = load_inertia;
  m.resistive_torque = resistive_torque;
  return m;
}

LoadModel LoadModel::compliant(double contact_angle, double stiffness, double contact_damping) {
  LoadModel m;
  m.kind = LoadKind::CompliantLoad;
  m.contact_angle = contact_angle;
  m.stiffness = stiffness;
  m.contact_damping = contact_damping;
  return m;
}

void LoadModel::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError("load: " + msg); };
  if (!std::isfinite(contact_angle)) fail("contact_angle must be finite");
  if (kind == LoadKind::InertialLoad) {
    if (!(load_inertia > 0.0)) fail("I_L must be positive");
    if (resistive_torque < 0.0) fail("resistive_torque must be non-negative");
  }
  if (kind == LoadKind::CompliantLoad) {
    if (!(stiffness > 0.0)) fail("k_c must be positive");
    if (contact_damping < 0.0) fail("b_c must be non-negative");
  }
}

double external_torque(const LoadModel& load, double output_angle, double output_speed) {
  if (output_angle < load.contact_angle) return 0.0;
  switch (load.kind) {
    case LoadKind::Free:
    case LoadKind::FixedObstacle:
      return 0.0;
    case LoadKind::InertialLoad: {
      if (output_speed > 0.0) return -load.resistive_torque;
      if (output_speed < 0.0) return load.resistive_torque;
      return 0.0;
    }
    case LoadKind::CompliantLoad: {
      const double push_back = load.stiffness * (output_angle - load.contact_angle) +
                               load.contact_damping * output_speed;
      // Unilateral: the compliant contact never pulls the output inward.
      return -std::max(0.0, push_back);
    }
  }
  return 0.0;
}

std::optional<double> detect_crossing(const LoadModel& load, double theta_before,
                                      double theta_after) {
  if (load.kind == LoadKind::Free) return std::nullopt;
  const double a = theta_before - load.contact_angle;
  const double b = theta_after - load.contact_angle;
  if (a == 0.0) return 0.0;  // boundary belongs to the crossing
  if ((a < 0.0) == (b < 0.0)) return std::nullopt;
  return a / (a - b);
}

double impact_impulse(const ActuatorParams& p, Mode mode, const LoadModel& load,
                      double approach_speed) {
  if (approach_speed <= 0.0) return 0.0;  // moving away or resting: no impact
  switch (load.kind) {
    case LoadKind::Free:
    case LoadKind::CompliantLoad:
      return 0.0;
    case LoadKind::FixedObstacle:
      return -effective_output_inertia(p, mode) * approach_speed;
    case LoadKind::InertialLoad: {
      // Inelastic merge with a load initially at rest; both end at the common
      // velocity I_eff w- / (I_eff + I_L).
      const double actuator_inertia = effective_output_inertia(p, mode);
      return -actuator_inertia * load.load_inertia * approach_speed /
             (actuator_inertia + load.load_inertia);
    }
  }
  return 0.0;
}

}  // namespace dsdm
