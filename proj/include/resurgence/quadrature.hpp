#ifndef RESURGENCE_QUADRATURE_HPP
#define RESURGENCE_QUADRATURE_HPP

#include <functional>

#include "resurgence/bigreal.hpp"

namespace resurgence {

/// tanh-sinh (double-exponential) quadrature on a finite interval.
/// Handles integrable endpoint singularities; nodes are generated from the
/// endpoint distances so they never collapse onto the endpoints.
class TanhSinh {
public:
    explicit TanhSinh(long digits);

    /// f(x) where x = a + da = b - db; singular factors should be computed
    /// from the endpoint distances da/db when x sits near an endpoint.
    using Integrand = std::function<BigReal(const BigReal& x, const BigReal& da,
                                            const BigReal& db)>;

    /// Integrates f over (a, b) to absolute tolerance; throws
    /// quadrature_error when the level cap is reached first.
    BigReal integrate(const Integrand& f, const BigReal& a, const BigReal& b,
                      const BigReal& abs_tol, int max_level = 12) const;

    long digits() const { return digits_; }

private:
    long digits_;
    BigReal t_max_;

    struct Node {
        BigReal dist;   // distance from the nearer endpoint, scaled to (0, 1/2]
        BigReal weight; // transformation weight w(t), level step applied later
    };
    // nodes_[level] holds the fresh nodes of that refinement level (t > 0 side)
    mutable std::vector<std::vector<Node>> nodes_;
    const std::vector<Node>& level_nodes(int level) const;
    Node make_node(const BigReal& t) const;
};

} // namespace resurgence

#endif
