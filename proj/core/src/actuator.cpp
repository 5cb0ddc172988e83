#include "dsdm/actuator.hpp"

#include <cmath>

namespace dsdm {

namespace {

void require_mode(const HybridState& s, Mode expected, const char* where) {
  if (s.mode != expected) {
    throw InvalidTransition(std::string(where) + ": actuator is in mode " + to_token(s.mode) +
                            ", expected " + to_token(expected));
  }
}

void require_locked_m1(const HybridState& s, const char* where) {
  if (s.motor1_speed != 0.0) {
    throw ValidationError(std::string(where) + ": motor1_speed must be exactly 0 in HF mode");
  }
}

struct HsMatrices {
  double h00, h01, h11;  // symmetric mass matrix
  double d00, d01, d11;  // symmetric damping matrix
  double det;            // det(H), expanded in positive terms
};

HsMatrices hs_matrices(const ActuatorParams& p) {
  const double r2 = p.gear_ratio_m2;
  const double g = p.gear_ratio_m2 / p.gear_ratio_m1;
  HsMatrices m;
  m.h00 = p.inertia_output + r2 * r2 * p.inertia_m2;
  m.h01 = -r2 * g * p.inertia_m2;
  m.h11 = p.inertia_m1 + g * g * p.inertia_m2;
  m.d00 = p.damping_output + r2 * r2 * p.damping_m2;
  m.d01 = -r2 * g * p.damping_m2;
  m.d11 = p.damping_m1 + g * g * p.damping_m2;
  // All three terms positive: no cancellation, det stays accurate even when
  // the reflected M2 inertia dominates both diagonal entries.
  m.det = p.inertia_output * p.inertia_m1 + g * g * p.inertia_output * p.inertia_m2 +
          r2 * r2 * p.inertia_m1 * p.inertia_m2;
  return m;
}

}  // namespace

const char* to_token(Mode mode) { return mode == Mode::HighSpeed ? "HS" : "HF"; }

Mode mode_from_token(const std::string& token) {
  if (token == "HS") return Mode::HighSpeed;
  if (token == "HF") return Mode::HighForce;
  throw ValidationError("unknown mode token '" + token + "' (expected HS or HF)");
}

ActuatorParams ActuatorParams::prototype() {
  // Measured per-mode reflected inertias and the reflected-inertia ratio of
  // the two branches; the ratio pins how the HS value splits between the
  // output body and the M1 rotor.
  constexpr double kReflectedHs = 0.004;  // I_o + R1^2 I_1
  constexpr double kReflectedHf = 0.22;   // I_o + R2^2 I_2
  constexpr double kBranchRatio = 425.0;  // (R2^2 I_2) / (R1^2 I_1)
  constexpr double kR1 = 23.0;
  constexpr double kR2 = 474.0;
  const double m1_reflected = (kReflectedHf - kReflectedHs) / (kBranchRatio - 1.0);
  const double m2_reflected = kBranchRatio * m1_reflected;

  ActuatorParams p;
  p.gear_ratio_m1 = kR1;
  p.gear_ratio_m2 = kR2;
  p.inertia_m1 = m1_reflected / (kR1 * kR1);
  p.inertia_m2 = m2_reflected / (kR2 * kR2);
  p.inertia_output = kReflectedHs - m1_reflected;
  p.damping_output = 0.01;
  p.damping_m1 = 1e-6;
  p.damping_m2 = 1e-6;
  p.max_torque_m1 = 2.0 / kR1;    // 2 N m at the output in HS mode
  p.max_torque_m2 = 14.0 / kR2;   // 14 N m at the output in HF mode
  p.max_output_speed_hs = 220.0 * 2.0 * M_PI / 60.0;  // 220 rpm
  p.max_output_speed_hf = 10.0 * 2.0 * M_PI / 60.0;   // 10 rpm
  p.brake_delay = 0.010;
  return p;
}

void ActuatorParams::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError("actuator: " + msg); };
  if (!(gear_ratio_m1 > 1.0)) fail("gear_ratio_m1 (R1) must be > 1");
  if (!(gear_ratio_m2 > gear_ratio_m1)) fail("gear_ratio_m2 (R2) must exceed gear_ratio_m1 (R1)");
  if (!(inertia_output > 0.0)) fail("inertia_output (I_o) must be positive");
  if (!(inertia_m1 > 0.0)) fail("inertia_m1 (I_1) must be positive");
  if (!(inertia_m2 > 0.0)) fail("inertia_m2 (I_2) must be positive");
  if (damping_output < 0.0 || damping_m1 < 0.0 || damping_m2 < 0.0)
    fail("damping values must be non-negative");
  if (max_torque_m1 < 0.0 || max_torque_m2 < 0.0) fail("torque limits must be non-negative");
  if (max_output_speed_hs < 0.0 || max_output_speed_hf < 0.0)
    fail("speed limits must be non-negative");
  if (brake_delay < 0.0) fail("brake_delay must be non-negative");
  // SPD mass matrix follows from positive inertias (det > 0 by the positive
  // expansion), so no extra check is needed here.
}

double motor2_speed(const ActuatorParams& p, const HybridState& s) {
  return p.gear_ratio_m2 * (s.output_speed - s.motor1_speed / p.gear_ratio_m1);
}

MotorTorques static_torque_balance(const ActuatorParams& p, double output_torque) {
  return {-output_torque / p.gear_ratio_m1, -output_torque / p.gear_ratio_m2};
}

AngularAccel dynamics_hf(const ActuatorParams& p, const HybridState& s, const TorqueInput& u) {
  require_mode(s, Mode::HighForce, "dynamics_hf");
  require_locked_m1(s, "dynamics_hf");
  const double r2 = p.gear_ratio_m2;
  const double inertia = p.inertia_output + r2 * r2 * p.inertia_m2;
  const double drag = (p.damping_output + r2 * r2 * p.damping_m2) * s.output_speed;
  return {(-drag + r2 * u.motor2 + u.output) / inertia, 0.0};
}

AngularAccel dynamics_hs(const ActuatorParams& p, const HybridState& s, const TorqueInput& u) {
  require_mode(s, Mode::HighSpeed, "dynamics_hs");
  const double g = p.gear_ratio_m2 / p.gear_ratio_m1;
  const HsMatrices m = hs_matrices(p);
  // Generalized forces on the (output, M1) coordinates minus damping.
  const double f_o = p.gear_ratio_m2 * u.motor2 + u.output -
                     (m.d00 * s.output_speed + m.d01 * s.motor1_speed);
  const double f_1 = u.motor1 - g * u.motor2 - (m.d01 * s.output_speed + m.d11 * s.motor1_speed);
  return {(m.h11 * f_o - m.h01 * f_1) / m.det, (m.h00 * f_1 - m.h01 * f_o) / m.det};
}

HybridState jump_upshift(const HybridState& s) {
  require_mode(s, Mode::HighForce, "jump_upshift");
  HybridState out = s;
  out.mode = Mode::HighSpeed;
  out.motor1_speed = 0.0;
  return out;
}

HybridState jump_downshift(const ActuatorParams& p, const HybridState& s) {
  require_mode(s, Mode::HighSpeed, "jump_downshift");
  const double r2 = p.gear_ratio_m2;
  const double denom =
      p.gear_ratio_m1 * (p.inertia_output / (p.inertia_m2 * r2 * r2) + 1.0);
  HybridState out = s;
  out.mode = Mode::HighForce;
  out.output_speed = s.output_speed - s.motor1_speed / denom;
  out.motor1_speed = 0.0;
  return out;
}

HybridState jump_impact_hs(const ActuatorParams& p, const HybridState& s, double impulse) {
  require_mode(s, Mode::HighSpeed, "jump_impact_hs");
  const HsMatrices m = hs_matrices(p);
  HybridState out = s;
  out.output_speed += m.h11 * impulse / m.det;
  out.motor1_speed += -m.h01 * impulse / m.det;
  return out;
}

HybridState jump_impact_hs_simplified(const ActuatorParams& p, const HybridState& s,
                                      double impulse) {
  require_mode(s, Mode::HighSpeed, "jump_impact_hs_simplified");
  const double r1 = p.gear_ratio_m1;
  const double shared = impulse / (p.inertia_output + p.inertia_m1 * r1 * r1);
  HybridState out = s;
  out.output_speed += shared;
  out.motor1_speed += r1 * shared;
  return out;
}

HybridState jump_impact_hf(const ActuatorParams& p, const HybridState& s, double impulse) {
  require_mode(s, Mode::HighForce, "jump_impact_hf");
  require_locked_m1(s, "jump_impact_hf");
  const double r2 = p.gear_ratio_m2;
  HybridState out = s;
  out.output_speed += impulse / (p.inertia_output + r2 * r2 * p.inertia_m2);
  return out;
}

MotorTorques nullspace_projection(const ActuatorParams& p, double u) {
  const double g = p.gear_ratio_m2 / p.gear_ratio_m1;
  return {p.inertia_m1 * u, -g * p.inertia_m2 * u};
}

double reduced_io_dynamics_hs(const ActuatorParams& p, double output_speed, double torque_m1,
                              double torque_m2) {
  const double r1 = p.gear_ratio_m1;
  const double r2 = p.gear_ratio_m2;
  const double inertia_scale = (r1 / r2) * (r1 / r2) * (p.inertia_m1 / p.inertia_m2);
  const double total_inertia =
      p.inertia_output + r1 * r1 * p.inertia_m1 + inertia_scale * p.inertia_output;
  const double total_damping = p.damping_output + inertia_scale * p.damping_output;
  const double drive =
      r1 * torque_m1 + r1 * (r1 * p.inertia_m1) / (r2 * p.inertia_m2) * torque_m2;
  return (drive - total_damping * output_speed) / total_inertia;
}

double reduced_io_dynamics_moded(const ActuatorParams& p, Mode mode, double output_speed,
                                 double desired_torque) {
  const double ratio = mode == Mode::HighSpeed ? p.gear_ratio_m1 : p.gear_ratio_m2;
  const double rotor = mode == Mode::HighSpeed ? p.inertia_m1 : p.inertia_m2;
  return (ratio * desired_torque - p.damping_output * output_speed) /
         (p.inertia_output + ratio * ratio * rotor);
}

double effective_output_inertia(const ActuatorParams& p, Mode mode) {
  if (mode == Mode::HighForce) {
    const double r2 = p.gear_ratio_m2;
    return p.inertia_output + r2 * r2 * p.inertia_m2;
  }
  const HsMatrices m = hs_matrices(p);
  return m.det / m.h11;
}

double output_locked_motor1_accel(const ActuatorParams& p, const HybridState& s,
                                  const TorqueInput& u) {
  if (s.mode == Mode::HighForce) return 0.0;
  const double g = p.gear_ratio_m2 / p.gear_ratio_m1;
  const HsMatrices m = hs_matrices(p);
  // Output row is replaced by the constraint w_o = 0; only the M1 row evolves.
  const double f_1 = u.motor1 - g * u.motor2 - m.d11 * s.motor1_speed;
  return f_1 / m.h11;
}

double output_locked_reaction(const ActuatorParams& p, const HybridState& s,
                              const TorqueInput& u) {
  const double r2 = p.gear_ratio_m2;
  if (s.mode == Mode::HighForce) {
    return r2 * u.motor2 + u.output;
  }
  const HsMatrices m = hs_matrices(p);
  const double accel_m1 = output_locked_motor1_accel(p, s, u);
  const double f_o = r2 * u.motor2 + u.output - m.d01 * s.motor1_speed;
  // The stop supplies whatever the output row cannot balance on its own.
  return f_o - m.h01 * accel_m1;
}

}  // namespace dsdm
