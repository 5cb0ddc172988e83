#pragma once

#include <string>

#include "dsdm/errors.hpp"

namespace dsdm {

/// Discrete operating mode of the actuator.
///
/// HighSpeed: brake open, both motors free, low effective reduction.
/// HighForce: brake closed, M1 locked, only M2 drives through the large
/// reduction. The brake state is the ground truth for the mode.
enum class Mode { HighSpeed, HighForce };

const char* to_token(Mode mode);                // "HS" / "HF"
Mode mode_from_token(const std::string& token); // throws ValidationError

/// Physical parameters of a dual-speed dual-motor actuator.
///
/// Both motors couple to one output through a differential: M1 through the
/// total reduction gear_ratio_m1, M2 through the much larger gear_ratio_m2.
/// Port speeds satisfy w1/R1 + w2/R2 = w_o. Each port carries its own
/// inertia and viscous damping.
struct ActuatorParams {
  double gear_ratio_m1 = 0.0;  ///< total reduction of the M1 path (> 1)
  double gear_ratio_m2 = 0.0;  ///< total reduction of the M2 path (> gear_ratio_m1)
  double inertia_output = 0.0; ///< output-port inertia, kg m^2
  double inertia_m1 = 0.0;     ///< M1 rotor-side inertia, kg m^2
  double inertia_m2 = 0.0;     ///< M2 rotor-side inertia, kg m^2
  double damping_output = 0.0; ///< viscous damping at the output port, N m s/rad
  double damping_m1 = 0.0;     ///< viscous damping at the M1 port, N m s/rad
  double damping_m2 = 0.0;     ///< viscous damping at the M2 port, N m s/rad
  double max_torque_m1 = 0.0;  ///< M1 electromagnetic torque limit, motor side, N m
  double max_torque_m2 = 0.0;  ///< M2 electromagnetic torque limit, motor side, N m
  double max_output_speed_hs = 0.0; ///< output speed limit in high-speed mode, rad/s
  double max_output_speed_hf = 0.0; ///< output speed limit in high-force mode, rad/s
  double brake_delay = 0.0;    ///< brake command to mechanical engagement, s

  /// Parameters of the 1.5 kg prototype (1:23 / 1:474).
  ///
  /// Only the per-mode reflected inertias (0.004 and 0.22 kg m^2) and their
  /// branch ratio (425) are measured quantities; the per-port inertias are
  /// fitted so that all three hold simultaneously. tools/fit_params.py
  /// reproduces the fit.
  static ActuatorParams prototype();

  /// Throws ValidationError if any invariant is violated.
  void validate() const;
};

/// Continuous + discrete state of one actuator.
///
/// The two independent velocities are the output and M1 ports; the M2 port
/// speed follows from the kinematic constraint (see motor2_speed). In
/// high-force mode motor1_speed is exactly zero.
struct HybridState {
  Mode mode = Mode::HighSpeed;
  double output_angle = 0.0;  ///< rad
  double output_speed = 0.0;  ///< rad/s
  double motor1_speed = 0.0;  ///< rad/s
};

/// Electromagnetic motor torques (motor side) plus any output-side external
/// torque. Values are stored unclamped; saturation is the controller's job.
struct TorqueInput {
  double motor1 = 0.0;  ///< N m
  double motor2 = 0.0;  ///< N m
  double output = 0.0;  ///< N m
};

/// A motor torque pair, used by routing, projection, and saturation.
struct MotorTorques {
  double motor1 = 0.0;
  double motor2 = 0.0;
};

/// Angular accelerations of the two independent ports.
struct AngularAccel {
  double output = 0.0;  ///< rad/s^2
  double motor1 = 0.0;  ///< rad/s^2
};

/// M2 port speed implied by the kinematic constraint:
/// w2 = R2 (w_o - w1/R1). In high-force mode this reduces to R2 w_o.
double motor2_speed(const ActuatorParams& p, const HybridState& s);

/// Quasi-static motor torques balancing an external output torque:
/// R1 t1 = R2 t2 = -tau_output.
MotorTorques static_torque_balance(const ActuatorParams& p, double output_torque);

/// High-force mode dynamics (brake closed, 1 DoF). Requires motor1_speed == 0.
AngularAccel dynamics_hf(const ActuatorParams& p, const HybridState& s, const TorqueInput& u);

/// High-speed mode dynamics (brake open, 2 DoF): H dw = B tau - D w.
AngularAccel dynamics_hs(const ActuatorParams& p, const HybridState& s, const TorqueInput& u);

/// Brake release. Frees M1 from rest; no impulsive behavior, the output
/// velocity carries over unchanged.
HybridState jump_upshift(const HybridState& s);

/// Brake engagement. Removes the M1 degree of freedom; a nonzero M1 velocity
/// is absorbed impulsively and deflects the output by
/// -w1 / (R1 (I_o / (R2^2 I_2) + 1)). With w1 == 0 the map is smooth.
HybridState jump_downshift(const ActuatorParams& p, const HybridState& s);

/// Output-side impulse in high-speed mode: H (w+ - w-) = [p_o, 0].
HybridState jump_impact_hs(const ActuatorParams& p, const HybridState& s, double impulse);

/// Impulse map in the regime R2^2 I_2 >> R1^2 I_1: M2 keeps its speed and the
/// output jump is transmitted to M1 scaled by R1.
HybridState jump_impact_hs_simplified(const ActuatorParams& p, const HybridState& s,
                                      double impulse);

/// Output-side impulse in high-force mode (brake holds, no slip):
/// dw_o = p_o / (I_o + R2^2 I_2).
HybridState jump_impact_hf(const ActuatorParams& p, const HybridState& s, double impulse);

/// The one-parameter family of motor torque pairs that leaves the output
/// untouched in high-speed mode: (I_1 u, -(R2/R1) I_2 u). Depends only on
/// intrinsic parameters, not on the load.
MotorTorques nullspace_projection(const ActuatorParams& p, double u);

/// Output acceleration in high-speed mode after eliminating the M1 state,
/// with motor-side damping neglected. Exact for damping_m1 = damping_m2 = 0
/// and zero external torque.
double reduced_io_dynamics_hs(const ActuatorParams& p, double output_speed, double torque_m1,
                              double torque_m2);

/// Single-motor abstraction of either mode: dw_o = (R tau_d - b_o w_o) /
/// (I_o + R^2 I), with R and I of the driving motor selected by the mode.
double reduced_io_dynamics_moded(const ActuatorParams& p, Mode mode, double output_speed,
                                 double desired_torque);

/// Apparent output inertia against an impulsive output load.
/// High-force: I_o + R2^2 I_2. High-speed: the reciprocal of the (output,
/// output) entry of H^-1.
double effective_output_inertia(const ActuatorParams& p, Mode mode);

/// M1 acceleration with the output held at zero speed by a hard constraint.
double output_locked_motor1_accel(const ActuatorParams& p, const HybridState& s,
                                  const TorqueInput& u);

/// Reaction the constraint must supply to hold the output still; positive
/// while the actuator pushes into the stop. Negative values mean the
/// constraint would have to pull and should be released.
double output_locked_reaction(const ActuatorParams& p, const HybridState& s,
                              const TorqueInput& u);

}  // namespace dsdm
