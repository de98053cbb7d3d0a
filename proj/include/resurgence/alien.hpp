#ifndef RESURGENCE_ALIEN_HPP
#define RESURGENCE_ALIEN_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "resurgence/rational.hpp"

namespace resurgence {

/// One monomial of the alien calculus: an optional atom delta^k y_m^sigma
/// together with scalar factors S^s_pow * e^{-lambda x * e_pow} * C^c_pow.
/// Expressions without an atom act as operator polynomials in delta.
struct AlienMono {
    bool has_atom = false;
    unsigned delta_pow = 0; // k
    unsigned sector = 0;    // m (atom only)
    bool minus = false;     // sigma: false = '+', true = '-'
    int s_pow = 0;
    int e_pow = 0;
    int c_pow = 0;

    auto operator<=>(const AlienMono&) const = default;
};

/// Formal linear combination of AlienMono with exact rational coefficients.
/// Zero-coefficient terms are pruned on every mutation.
class DeltaExpression {
public:
    DeltaExpression() = default;

    static DeltaExpression zero() { return {}; }
    static DeltaExpression scalar(const Rational& r);
    /// Operator monomial delta^k.
    static DeltaExpression delta_op(unsigned k);
    /// Atom delta^k y_m^sigma.
    static DeltaExpression atom(unsigned k, unsigned m, bool minus);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<AlienMono, Rational>& terms() const { return terms_; }

    Rational coeff(const AlienMono& m) const;

    DeltaExpression& add(const AlienMono& m, const Rational& c);
    friend DeltaExpression operator+(const DeltaExpression& a, const DeltaExpression& b);
    friend DeltaExpression operator-(const DeltaExpression& a, const DeltaExpression& b);
    DeltaExpression operator-() const;
    DeltaExpression scaled(const Rational& c) const;
    /// Multiply every term by S^ds * e^{-lambda x}^de * C^dc.
    DeltaExpression shifted(int ds, int de, int dc) const;

    /// Product of two operator expressions (no atoms), truncated at delta^K.
    static DeltaExpression op_mul(const DeltaExpression& a, const DeltaExpression& b,
                                  unsigned K);
    /// Apply an operator expression to this expression (delta powers add),
    /// truncating atoms at total grade delta_pow + sector > K.
    DeltaExpression apply_op(const DeltaExpression& op, unsigned K) const;

    /// Rewrite every minus atom via delta^k y^- = delta^{k+1} y^+ + delta^k y^+,
    /// truncating at grade K.
    DeltaExpression eliminate_minus(unsigned K) const;

    /// Drop atoms with delta_pow + sector > K (and operator terms with
    /// delta_pow > K).
    DeltaExpression truncate(unsigned K) const;

    std::string str() const;
    bool operator==(const DeltaExpression& o) const { return terms_ == o.terms_; }

private:
    std::map<AlienMono, Rational> terms_;
};

/// (1+delta)^alpha through delta^K as an operator expression.
DeltaExpression stokes_power(const Rational& alpha, unsigned K);

/// log(1+delta)^n through delta^K as an operator expression (n >= 1).
DeltaExpression alien_derivative_power(unsigned n, unsigned K);

/// Expansion of delta^k in powers of the alien derivative:
/// delta^k = sum_j w_j Delta^j; returns w_k..w_K (w_k = 1 leading).
std::vector<Rational> delta_in_alien_powers(unsigned k, unsigned K);

/// Ecalle averaging weight lambda_{p,q} = (2p)!(2q)!/(4^{p+q} p! q! (p+q)!).
Rational averaging_weight(unsigned p, unsigned q);

/// Residual of the balanced-average identity through delta^K: the expansion
/// of G^{1/2} A+ in upper-lateral atoms (weights lambda_{n-1,1}) minus the
/// same object expanded through A- atoms (weights lambda_{n,0}), with all
/// minus atoms removed via Definition 3. Must be identically zero.
DeltaExpression balanced_average_residual(unsigned K);

/// One row entry of the medianized-transseries coefficient table.
struct MedianEntry {
    unsigned c_pow = 0;
    unsigned delta_pow = 0; // power of delta' attached to y0^+
    int s_pow = 0;          // power of S' (negative: 1/S'^q)
    Rational coeff;
};

struct MedianCoefficientTable {
    unsigned K = 4;
    std::vector<MedianEntry> entries; // sorted by (c_pow, delta_pow)
    // The C^0 row always carries the Cauchy-principal-value marker in
    // addition to its delta' corrections.
    bool pv_marker = true;

    Rational coeff(unsigned c_pow, unsigned delta_pow) const;
    std::string to_json() const;
    static MedianCoefficientTable from_json(const std::string& text);
};

/// Builds the bridge-equation system from the medianized resurgence relation
/// truncated at delta^K / y_K, eliminates minus atoms, solves the linear
/// system for all delta^k y_m^+ (m >= 1) in terms of delta^n y_0^+, and
/// assembles the medianized-transseries coefficient table.
MedianCoefficientTable solve_bridge_system(unsigned K = 4);

} // namespace resurgence

#endif
