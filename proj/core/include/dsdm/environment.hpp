#pragma once

#include <optional>
#include <string>

#include "dsdm/actuator.hpp"

namespace dsdm {

enum class LoadKind { Free, FixedObstacle, InertialLoad, CompliantLoad };

const char* to_token(LoadKind kind);                   // "free" / "fixed" / ...
LoadKind load_kind_from_token(const std::string& token);

/// Output-side world model. Contact is unilateral: the load acts only for
/// output_angle >= contact_angle and only pushes back.
///
/// Free:           no interaction.
/// FixedObstacle:  rigid stop; handled as an impact plus a hard velocity
///                 constraint by the simulator.
/// InertialLoad:   rigid body of inertia load_inertia that attaches
///                 inelastically on impact and resists motion with a dry
///                 resistive torque.
/// CompliantLoad:  spring-damper contact, force continuous at touch-down.
struct LoadModel {
  LoadKind kind = LoadKind::Free;
  double contact_angle = 0.0;     ///< rad
  double load_inertia = 0.0;      ///< I_L, kg m^2 (inertial)
  double resistive_torque = 0.0;  ///< N m, opposes motion (inertial)
  double stiffness = 0.0;         ///< k_c, N m/rad (compliant)
  double contact_damping = 0.0;   ///< b_c, N m s/rad (compliant)

  static LoadModel free();
  static LoadModel fixed_obstacle(double contact_angle);
  static LoadModel inertial(double contact_angle, double load_inertia, double resistive_torque);
  static LoadModel compliant(double contact_angle, double stiffness, double contact_damping);

  void validate() const;
};

/// One impulsive or contact-topology event observed during simulation.
struct ContactEvent {
  enum class Kind { Impact, Engage, Release };
  double time = 0.0;     ///< s
  double impulse = 0.0;  ///< N m s (zero for non-impulsive events)
  Kind kind = Kind::Impact;
};

/// Continuous external torque the load applies to the output at the given
/// pose. Zero whenever output_angle < contact_angle. For the compliant load
/// the force is clamped one-sided: the contact can push the output out but
/// never drag it in.
///
/// FixedObstacle returns 0 here; its reaction exists only through the hard
/// constraint the simulator manages. InertialLoad contributes its resistive
/// torque; the inertia coupling is handled by the simulator through an
/// augmented output inertia while attached.
double external_torque(const LoadModel& load, double output_angle, double output_speed);

/// Fraction in [0, 1] at which a linear sweep from theta_before to
/// theta_after crosses the contact angle, if it does. A start exactly on the
/// boundary reports 0.
std::optional<double> detect_crossing(const LoadModel& load, double theta_before,
                                      double theta_after);

/// Impulse exchanged when the output reaches the contact angle moving inward
/// at approach_speed. Perfectly inelastic (restitution 0): a fixed obstacle
/// stops the output dead, an inertial load is brought to a common velocity,
/// a compliant load exchanges no impulse. Zero if the output moves away.
double impact_impulse(const ActuatorParams& p, Mode mode, const LoadModel& load,
                      double approach_speed);

}  // namespace dsdm
