#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcfsim {

/// Isotropic material with linear-in-temperature Young's modulus and free
/// thermal strain. The linear model is valid while |tce * (T - t_ref)| < 0.1.
struct Material {
  double e_ref = 0.0;   // Young's modulus at t_ref [Pa]
  double rho = 0.0;     // density [kg/m^3]
  double tce = 0.0;     // temperature coefficient of E [1/degC]
  double cte = 0.0;     // thermal expansion coefficient [1/degC]
  double t_ref = 25.0;  // reference temperature [degC]

  void validate() const {
    if (!(e_ref > 0.0))
      throw std::invalid_argument("Material: e_ref must be > 0");
    if (!(rho > 0.0))
      throw std::invalid_argument("Material: rho must be > 0");
    if (!std::isfinite(tce) || !std::isfinite(cte) || !std::isfinite(t_ref))
      throw std::invalid_argument("Material: tce, cte and t_ref must be finite");
  }
};

struct MaterialState {
  double e;            // E(T) [Pa]
  double free_strain;  // cte * (T - t_ref)
};

/// Evaluates E(T) = e_ref * (1 + tce * (T - t_ref)) and the unconstrained
/// thermal strain cte * (T - t_ref).
inline MaterialState material_at_temperature(const Material& m, double t_c) {
  const double dt = t_c - m.t_ref;
  if (!(std::abs(m.tce * dt) < 0.1))
    throw std::domain_error("material_at_temperature: T = " + std::to_string(t_c) +
                            " degC violates the linear-E validity domain");
  return {m.e_ref * (1.0 + m.tce * dt), m.cte * dt};
}

struct EffectiveProperties {
  double e_eff;    // [Pa]
  double rho_eff;  // [kg/m^3]
};

/// Homogenized properties of a section perforated with release holes of area
/// fraction p: E_eff = E * (1 - p)^k, rho_eff = rho * (1 - p). The exponent k
/// models the loss of bending stiffness through thinned ligaments; k = 1
/// recovers the plain area rule.
inline EffectiveProperties effective_perforated_properties(double e, double rho,
                                                           double porosity,
                                                           double exponent) {
  if (!(porosity >= 0.0 && porosity < 1.0))
    throw std::domain_error(
        "effective_perforated_properties: porosity must be in [0, 1)");
  if (!(exponent >= 1.0))
    throw std::domain_error(
        "effective_perforated_properties: stiffness exponent must be >= 1");
  const double solid = 1.0 - porosity;
  return {e * std::pow(solid, exponent), rho * solid};
}

}  // namespace tcfsim
