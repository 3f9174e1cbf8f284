#ifndef LPIS_SWSUBMODEL_HPP
#define LPIS_SWSUBMODEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lpis::sw {

// Reduced shallow-water submodel of the {X1, X4, X10+X12} partially invariant
// solution. In the invariants
//   lambda = y/s, V = v s - t lambda, H = h s^2, K = k s^2 - t,  s = sqrt(t^2+1)
// the factor system reads
//   V V' + H' = -lambda,  V K' + K^2 + 1 = 0,  V H' + H V' = -K H     (' = d/dlambda),
// and with d lambda/d mu = V it has K = -tan(mu), H V cos(mu) = m and the
// Bernoulli integral V^2 + lambda^2 + 2 H = b0. Eliminating H gives the cubic
//   V^3 cos(mu) + (lambda^2 - b0) V cos(mu) + 2 m = 0
// for V = lambda'(mu). The physical fields are
//   v = (V + t lambda)/s, h = H/s^2, k = (K + t)/s^2,
//   u = k x + g(mu - arctan t)/(cos(mu) s).

struct SubmodelParams {
    std::string name;
    double b0 = 2.0;
    double m_const = 0.1;
    std::function<double(double)> g;
    double lambda0 = 0.5;
    double mu0 = 0.1;
    /// Selects the cubic root at (lambda0, mu0).
    double v0 = 1.2;
    double step = 1e-3;
    double mu_min = -0.3;
    double mu_max = 0.5;
};

struct Tolerances {
    double bernoulli = 1e-8;
    double first_integral = 1e-10;
    double k_identity = 1e-12;
    double step_halving = 1e-8;
    double ode_consistency = 1e-5;
    double pde_residual = 1e-5;
    double h_fd = 1e-4;
    /// Residuals at this spacing and at half of it give the convergence order.
    double h_fd_convergence = 1e-4;
    double convergence_ratio = 4.0;
    double convergence_slack = 0.2;
};

/// Named parameter sets: "default" (m = 1/10, b0 = 2, g = 0.3 sin 2phi + 0.1)
/// and "degenerate" (m = 0, b0 = 1, g = 0). Throws InputError otherwise.
SubmodelParams preset(const std::string& name);
std::vector<std::string> preset_names();

/// Real roots of the cubic in V, ascending. Throws NumericError if cos(mu) = 0.
std::vector<double> lambda_prime_roots(double lambda, double mu, const SubmodelParams& p);

/// Root closest to reference; nullopt if there is no real root or the selected
/// root is within collision_tol of another one (the branch fold).
std::optional<double> solve_lambda_prime(double lambda, double mu, const SubmodelParams& p, double reference,
                                         double collision_tol = 1e-6);

struct Sample {
    double mu = 0;
    double lambda = 0;
    double V = 0;
    double H = 0;
    double K = 0;
};

struct Trajectory {
    /// Ascending in mu.
    std::vector<Sample> samples;
    double step = 0;
    /// Why either end stopped before reaching the requested mu range, empty if it did not.
    std::string termination_low;
    std::string termination_high;

    double max_bernoulli_drift(const SubmodelParams& p) const;
    double max_first_integral_drift(const SubmodelParams& p) const;
    double max_k_drift() const;
};

/// Classical RK4 for d lambda/d mu = V(lambda, mu) from (mu0, lambda0) in both
/// directions; H and K come from the first integrals. Stops at a branch fold,
/// V -> 0 or cos(mu) -> 0 and records the reason.
Trajectory integrate_submodel(const SubmodelParams& p);

/// Independent integration of the factor system for (lambda, V, H) in mu,
/// without using the first integrals. Returns the maximum Bernoulli and
/// first-integral drift along the run.
struct OdeDrift {
    double bernoulli = 0;
    double first_integral = 0;
    double mu_reached_low = 0;
    double mu_reached_high = 0;
};
OdeDrift integrate_factor_system(const SubmodelParams& p);

struct FieldPoint {
    double t = 0, x = 0, y = 0;
    double u = 0, v = 0, h = 0;
};

struct ReconstructOptions {
    /// Added to K before reconstruction; sensitivity control for the residual check.
    double k_perturbation = 0.0;
};

/// Evaluates (u, v, h) from a trajectory by inverting lambda -> mu: from the
/// nearest stored node the equation d mu/d lambda = 1/V is integrated with two
/// RK4 substeps.
class FieldEvaluator {
public:
    FieldEvaluator(const Trajectory& traj, const SubmodelParams& p, ReconstructOptions options = {});

    double lambda_min() const;
    double lambda_max() const;

    /// Throws NumericError outside the trajectory's lambda range.
    FieldPoint evaluate(double t, double x, double y) const;
    /// Same, integrating from the given node (keeps finite-difference stencils smooth).
    FieldPoint evaluate_from(std::size_t node, double t, double x, double y) const;
    std::size_t nearest_node(double lambda) const;
    /// mu and V for a given lambda.
    std::pair<double, double> invert(std::size_t node, double lambda) const;

private:
    const Trajectory* traj_;
    SubmodelParams params_;
    ReconstructOptions options_;
    bool increasing_;
};

/// Grid of points with lambda strictly inside the trajectory's range.
std::vector<FieldPoint> default_grid(const FieldEvaluator& fields);

std::vector<FieldPoint> reconstruct_fields(const Trajectory& traj, const SubmodelParams& p,
                                           const std::vector<FieldPoint>& grid, ReconstructOptions options = {});

struct ResidualReport {
    double mass = 0;
    double x_momentum = 0;
    double y_momentum = 0;
    double max() const;
};

/// Central differences of
///   u_t + u u_x + v u_y + h_x, v_t + u v_x + v v_y + h_y, h_t + (u h)_x + (v h)_y
/// at each grid point; maximum absolute values.
ResidualReport pde_residual(const FieldEvaluator& fields, const std::vector<FieldPoint>& grid, double h_fd);

/// Maximum over the trajectory of the finite-difference residuals of
/// V H' + H V' + K H, V V' + H' + lambda and V K' + K^2 + 1 (fourth-order differences in mu).
double ode_consistency(const Trajectory& traj);

/// Rate of change of an invariant candidate along X10+X12 (prolonged to k),
/// estimated by an explicit Euler step of size eps from (t, x, y, u, v, h, k).
struct InvarianceProbe {
    double lambda_quotient = 0;
    double lambda_product = 0;
    double V = 0;
    double H = 0;
    double K = 0;
};
InvarianceProbe flow_invariance(double t, double y, double v, double h, double k, double eps);

struct Check {
    std::string name;
    double value = 0;
    double tolerance = 0;
    /// value <= tolerance, or |value - tolerance target| within slack for ratios.
    bool pass = false;
};

struct VerificationReport {
    std::string preset;
    SubmodelParams params;
    Tolerances tolerances;
    std::size_t samples = 0;
    double lambda_min = 0;
    double lambda_max = 0;
    std::string termination_low;
    std::string termination_high;
    std::vector<Check> checks;
    std::vector<FieldPoint> fields;
    bool pass = false;
};

VerificationReport verify(const SubmodelParams& p, const Tolerances& tol = {});

} // namespace lpis::sw

#endif
