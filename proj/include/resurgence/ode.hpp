#ifndef RESURGENCE_ODE_HPP
#define RESURGENCE_ODE_HPP

#include <map>
#include <string>
#include <vector>

#include "resurgence/rational.hpp"

namespace resurgence {

struct NonlinearTerm {
    unsigned n; // power of y, n >= 2
    unsigned m; // power of 1/x, m >= 0
    Rational k;
};

/// Normal-form first-order ODE
///   y' = -lambda*y - A*y/x + f(x) + sum k_{nm} y^n x^{-m},
/// with f(x) = sum_m f_m x^{-m}, m >= 1. All constants exact rationals.
struct NormalFormODE {
    Rational lambda;                  // singularity spacing, > 0
    Rational a_lin;                   // A in the -A*y/x term
    std::map<unsigned, Rational> forcing;
    std::vector<NonlinearTerm> nonlinear;

    void validate() const;

    /// Right-hand side in double precision (reference integrator).
    double rhs(double x, double y) const;
};

NormalFormODE ode_from_json(const std::string& text);
std::string ode_to_json(const NormalFormODE& ode);
NormalFormODE ode_from_file(const std::string& path);

/// Built-in named examples ("euler", "ode-simple", "ode-cubic",
/// "ode-branch", "prototype"); throws config_error for unknown names.
NormalFormODE builtin_ode(const std::string& name);
std::string builtin_ode_json(const std::string& name);
std::vector<std::string> builtin_ode_names();

} // namespace resurgence

#endif
