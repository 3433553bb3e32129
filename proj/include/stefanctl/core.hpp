#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stefanctl {

/// Material constants of the liquid phase, SI units throughout.
struct PhysicalParams {
  double rho = 0.0;     ///< density [kg/m^3]
  double cp = 0.0;      ///< heat capacity [J/(kg K)]
  double k = 0.0;       ///< thermal conductivity [W/(m K)]
  double dh = 0.0;      ///< latent heat of fusion [J/kg]
  double t_melt = 0.0;  ///< melting temperature [K]

  /// Thermal diffusivity k/(rho cp) [m^2/s].
  double alpha() const { return k / (rho * cp); }
  /// Interface-velocity coefficient k/(rho dh) [m^2/(K s)].
  double beta() const { return k / (rho * dh); }

  /// Throws InvalidParameterError unless every field is strictly positive.
  void validate() const;
};

struct Coefficients {
  double alpha;
  double beta;
};

/// Validates params and returns the derived coefficients.
Coefficients derive_coefficients(const PhysicalParams& params);

enum class BcMode { ControlledFlux, PrescribedFlux, PrescribedTemperature };
enum class Integrator { Explicit, Implicit };

/// Full description of one experiment: material, controller gain, geometry,
/// initial data and numerical controls.
struct Scenario {
  PhysicalParams params;
  double gain_c = 0.0;       ///< controller gain c [1/s]
  double setpoint_sr = 0.0;  ///< interface setpoint s_r [m]
  double s0 = 0.0;           ///< initial interface position [m]
  double h_slope = 0.0;      ///< initial superheat slope H [K/m]
  double domain_length = 0;  ///< material length L [m]; 0 selects 1.2*s_r
  int n_cells = 200;         ///< immobilized-grid intervals (n+1 nodes)
  std::optional<double> dt;  ///< time step [s]; nullopt = automatic
  double t_final = 0.0;      ///< simulation horizon [s]
  BcMode bc_mode = BcMode::ControlledFlux;
  Integrator integrator = Integrator::Implicit;

  double dxi() const { return 1.0 / n_cells; }
  double length() const {
    return domain_length > 0 ? domain_length : 1.2 * setpoint_sr;
  }

  /// Throws InvalidParameterError on any violated invariant.
  void validate() const;
};

/// Temperature error u0 = T0 - Tm sampled at the immobilized nodes
/// xi_i = i/n over the initial liquid region [0, s0].
struct InitialProfile {
  std::vector<double> values;
};

/// Linear superheat profile u0(xi) = H s0 (1 - xi); the interface node is
/// exactly zero.
InitialProfile build_initial_profile(const Scenario& scenario);

struct FeasibilityVerdict {
  bool feasible;  ///< s_r clears the stored-superheat bound
  double margin;  ///< s_r minus the bound [m]
  double bound;   ///< s0 + (cp/dh) * int_0^s0 u0 dx [m]
};

/// Setpoint feasibility: the setpoint must exceed the initial interface
/// position plus the initial superheat converted to melt length. The
/// integral uses the shared trapezoid rule on the immobilized grid.
FeasibilityVerdict feasible_setpoint(const Scenario& scenario,
                                     const InitialProfile& profile);

}  // namespace stefanctl
