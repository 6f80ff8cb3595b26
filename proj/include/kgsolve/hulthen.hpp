#pragma once

#include <optional>

#include "kgsolve/nu_core.hpp"

namespace kgsolve::hulthen {

/// Physical inputs in natural units (hbar = c = 1).
struct ModelParams {
  double m0 = 1.0;  ///< asymptotic mass
  double m1 = 0.0;  ///< mass-deformation strength
  double V0 = 1.0;  ///< vector coupling
  double S0 = 1.0;  ///< scalar coupling
  double r0 = 1.0;  ///< screening radius

  /// Throws DomainError unless m0 > 0, r0 > 0 and m1 >= 0.
  void validate() const;
};

struct QuantumNumbers {
  int n = 0;
  int l = 0;

  void validate() const;
};

/// Energy-dependent constants of the reduced equation.
struct CoefficientSet {
  double alpha;         ///< r0 sqrt(m0^2 - E^2)
  double alpha_m1_sq;   ///< r0^2 ((m1 - m0)^2 - E^2), signed
  double beta1_sq;      ///< r0^2 (2 E V0 - 2 S0 (m1 - m0))
  double beta2_sq;      ///< r0^2 (2 E V0 - 2 m0 (m1 - S0))
  double nu_sq;         ///< r0^2 (S0^2 - V0^2)
  double nu_sq_m1;      ///< r0^2 ((S0 - m1)^2 - V0^2)
  double delta_prime;   ///< 1/2 + sqrt((2l+1)^2 + 4 nu_sq_m1) / 2
};

/// The two roots of the squared quantization condition, ascending.
struct EnergyPair {
  double e_a;
  double e_p;
  double discriminant;
  bool valid_a;  ///< unsquared right-hand side is non-negative at e_a
  bool valid_p;
  bool bound_a;  ///< |e_a| <= m0
  bool bound_p;
};

double mass_at(double r, const ModelParams& p);

struct PotentialPair {
  double scalar;
  double vector;
};

PotentialPair potentials_at(double r, const ModelParams& p);

struct CentrifugalPair {
  double exact;        ///< l(l+1) / r^2
  double approximate;  ///< l(l+1) e^{r/r0} / (r0^2 (e^{r/r0} - 1)^2)
};

CentrifugalPair centrifugal_pair(double r, int l, double r0);

/// Energy-independent effective angular parameter delta'.
/// Throws ComplexDeltaPrime when (2l+1)^2 + 4 nu_sq_m1 < 0.
double delta_prime(const ModelParams& p, int l);

/// Throws UnboundEnergy if m0^2 - E^2 < -1e-12 (values above are clamped) and
/// ComplexDeltaPrime on an over-critical coupling.
CoefficientSet coefficients(double E, const ModelParams& p, const QuantumNumbers& qn);

/// nu_sq_m1 assembled from the alpha/beta combination rather than directly;
/// equal to c.nu_sq_m1 as an algebraic identity.
double nu_sq_m1_from_identity(const CoefficientSet& c);

nu::NuProblem build_nu_problem(double E, const ModelParams& p, const QuantumNumbers& qn);

/// Quadratic coefficients (A E^2 + B E + C = 0) of the squared condition
///   r0 sqrt(m0^2 - E^2) = (P E + Q) / D.
struct QuantizationQuadratic {
  double P, Q, D;
  double A, B, C;
};

QuantizationQuadratic quantization_quadratic(const ModelParams& p, const QuantumNumbers& qn);

/// Closed-form particle/antiparticle levels; nullopt when the discriminant is
/// negative beyond the double-root tolerance.
std::optional<EnergyPair> energy_levels(const ModelParams& p, const QuantumNumbers& qn);

/// energy_levels with m1 forced to zero.
std::optional<EnergyPair> constant_mass_levels(const ModelParams& p, const QuantumNumbers& qn);

/// Unsquared sides of the condition at E: lhs = r0 sqrt(m0^2 - E^2),
/// rhs = (P E + Q) / D.
struct QuantizationSides {
  double lhs;
  double rhs;
};

QuantizationSides quantization_sides(double E, const ModelParams& p, const QuantumNumbers& qn);

/// Which form of the (1 - s) exponent and second Jacobi index to use:
/// `derived` gives (1-s)^{delta'} P_n^{(2 alpha, 2 delta' - 1)}, `printed` the
/// shifted (1-s)^{1+delta'} P_n^{(2 alpha, 1 + 2 delta')}.
enum class ExponentConvention { derived, printed };

/// Parameters of the closed-form radial function.
struct WaveShape {
  double alpha;
  double one_minus_exponent;
  double jacobi_a;
  double jacobi_b;
};

class BoundState {
 public:
  /// Builds the state at an eigenvalue E. Throws NoConvergence if E misses the
  /// squared condition by more than 1e-9 relative and NotNormalizable when
  /// alpha <= 1e-12.
  static BoundState make(const ModelParams& p, const QuantumNumbers& qn, double E);

  /// Same construction without the eigenvalue check, for probing the
  /// closed form away from an eigenvalue.
  static BoundState trial(const ModelParams& p, const QuantumNumbers& qn, double E);

  const ModelParams& params() const { return params_; }
  const QuantumNumbers& qn() const { return qn_; }
  double energy() const { return energy_; }
  const CoefficientSet& coeffs() const { return coeffs_; }
  double norm_closed() const { return norm_closed_; }
  double norm_quad() const { return norm_quad_; }

  WaveShape shape(ExponentConvention conv = ExponentConvention::derived) const;

 private:
  BoundState(const ModelParams& p, const QuantumNumbers& qn, double E);

  ModelParams params_;
  QuantumNumbers qn_;
  double energy_;
  CoefficientSet coeffs_;
  double norm_closed_;
  double norm_quad_;
};

/// Unnormalized radial function s^alpha (1-s)^e P_n^{(a,b)}(1 - 2s), s = e^{-r/r0}.
double wave_shape_at(const WaveShape& shape, int n, double r, double r0);

/// phi(r) scaled by norm_quad. Throws DomainError for r <= 0.
double wavefunction(const BoundState& b, double r,
                    ExponentConvention conv = ExponentConvention::derived);

/// Normalization constant from the closed Gamma-function expression with
/// beta = 2 delta' - 1 (the second Jacobi index of the wavefunction).
double normalization_closed(const BoundState& b);

/// A with \int_0^\infty |phi|^2 dr = 1, computed by quadrature in s.
double normalization_quadrature(const BoundState& b,
                                ExponentConvention conv = ExponentConvention::derived);

}  // namespace kgsolve::hulthen
