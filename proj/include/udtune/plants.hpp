#pragma once

#include <utility>
#include <vector>

#include "udtune/plant_model.hpp"

namespace udtune {

// 3-DOF helicopter, elevation and pitch axes.
struct HelicopterParams {
    double Kf = 0.1188;  // motor force constant (N/V)
    double La = 0.660;   // elevation arm (m)
    double Je = 1.034;   // elevation inertia (kg m^2)
    double Jp = 0.045;   // pitch inertia (kg m^2)
    double g = 9.8;
    double m = 0.094;    // effective mass (kg)
    double Lh = 0.178;   // pitch arm (m)
    // The default dynamics treat the right-hand sides as angular
    // accelerations directly; this flag divides them by Je and Jp instead
    // (the torque-balance form).
    bool divide_by_inertia = false;
};

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

// state (x1, x2, x3, x4) = (elevation, elevation rate, pitch, pitch rate),
// u = (u1, u2) = (voltage sum, voltage difference).
std::vector<double> helicopter_dynamics(const HelicopterParams& p,
                                        const std::vector<double>& x,
                                        const std::vector<double>& u);

// One PID step: updates the integral by the trapezoid rule, then evaluates
// u = kp*e + kd*(e - e_prev)/dt + ki*e_int.
double pid_control(const PidGains& gains, double e, double e_prev,
                   double& e_int, double dt);

constexpr double kHelicopterRefElevation = 0.4;
constexpr double kHelicopterRefPitch = 0.02;

PlantModel make_helicopter(const HelicopterParams& p = {});

// Quadrotor UAV.  The printed torque rows all carry the factor l/Ix; the
// corrected flag uses l/Iy on U3 and l/Iz on U4 instead.
struct QuadrotorParams {
    double Ix = 1.25e-2;
    double Iy = 1.25e-2;
    double Iz = 2.5e-2;
    double l = 0.2;   // arm length (m)
    double m = 2.0;   // mass (kg)
    double g = 9.8;
    bool corrected_torques = false;
};

// state chi = (phi, phi', theta, theta', psi, psi', x, x', y, y', z, z'),
// U = (U1, U2, U3, U4) = (total thrust, roll, pitch, yaw inputs).
std::vector<double> quadrotor_dynamics(const QuadrotorParams& p,
                                       const std::vector<double>& chi,
                                       const std::vector<double>& U);

struct IntermediateControls {
    double U1 = 0.0;
    double phi_d = 0.0;
    double theta_d = 0.0;
};

// Desired roll/pitch from a given thrust decomposition and magnitude.
// |asin| arguments within 1e-9 beyond 1 are clamped; farther out raises
// InfeasibleAttitudeError.
IntermediateControls desired_angles(double Ux, double Uy, double Uz,
                                    double U1, double psi_d);

// U1 = sqrt(Ux^2 + Uy^2 + Uz^2) plus the desired angles.  U1 = 0 raises
// ThrustDegenerateError.
IntermediateControls intermediate_controls(double Ux, double Uy, double Uz,
                                           double psi_d);

// One backstepping channel: U = (-k_i*z_i - f + chi_id_dot - z_prev) / g.
// |g| below 1e-6 raises ControlSingularityError.
double backstep_law(double k_i, double z_i, double z_prev, double f, double g,
                    double chi_id_dot);

// Backward-difference derivative smoothed by a one-pole low-pass with time
// constant tau_ratio * dt, cascaded twice for the second derivative.  Used
// for the numerically generated attitude references.
class FilteredDifferentiator {
  public:
    explicit FilteredDifferentiator(double tau_ratio = 5.0)
        : ratio_(tau_ratio) {}

    // Feeds the next sample, taken dt after the previous one; returns the
    // (first, second) derivative estimates.  The first sample yields zeros.
    std::pair<double, double> update(double v, double dt);

  private:
    double ratio_;
    bool primed_ = false;
    double prev_v_ = 0.0;
    double d1_ = 0.0;
    double prev_d1_ = 0.0;
    double d2_ = 0.0;
};

struct QuadrotorRefs {
    double x = 0.0, x_dot = 0.0, x_ddot = 0.0;
    double y = 0.0, y_dot = 0.0, y_ddot = 0.0;
    double z = 0.0, z_dot = 0.0, z_ddot = 0.0;
    double psi = 0.0;  // desired yaw, derivatives identically zero
};

// x = 0.5 sin(pi t / 25), y = 0.5 cos(pi t / 25), z = t / 6, psi = 0, with
// analytic first and second derivatives.
QuadrotorRefs quadrotor_reference_signals(double t);

PlantModel make_quadrotor(const QuadrotorParams& p = {});

}  // namespace udtune
