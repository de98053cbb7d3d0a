#include "resurgence/alien.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "resurgence/errors.hpp"

namespace resurgence {

DeltaExpression DeltaExpression::scalar(const Rational& r) {
    DeltaExpression e;
    e.add(AlienMono{}, r);
    return e;
}

DeltaExpression DeltaExpression::delta_op(unsigned k) {
    DeltaExpression e;
    AlienMono m;
    m.delta_pow = k;
    e.add(m, Rational(1));
    return e;
}

DeltaExpression DeltaExpression::atom(unsigned k, unsigned m, bool minus) {
    DeltaExpression e;
    AlienMono mono;
    mono.has_atom = true;
    mono.delta_pow = k;
    mono.sector = m;
    mono.minus = minus;
    e.add(mono, Rational(1));
    return e;
}

Rational DeltaExpression::coeff(const AlienMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

DeltaExpression& DeltaExpression::add(const AlienMono& m, const Rational& c) {
    if (c == 0)
        return *this;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

DeltaExpression operator+(const DeltaExpression& a, const DeltaExpression& b) {
    DeltaExpression r = a;
    for (const auto& [m, c] : b.terms_)
        r.add(m, c);
    return r;
}

DeltaExpression operator-(const DeltaExpression& a, const DeltaExpression& b) {
    DeltaExpression r = a;
    for (const auto& [m, c] : b.terms_)
        r.add(m, -c);
    return r;
}

DeltaExpression DeltaExpression::operator-() const {
    DeltaExpression r;
    for (const auto& [m, c] : terms_)
        r.add(m, -c);
    return r;
}

DeltaExpression DeltaExpression::scaled(const Rational& c) const {
    DeltaExpression r;
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.add(m, v * c);
    return r;
}

DeltaExpression DeltaExpression::shifted(int ds, int de, int dc) const {
    DeltaExpression r;
    for (const auto& [m, v] : terms_) {
        AlienMono mm = m;
        mm.s_pow += ds;
        mm.e_pow += de;
        mm.c_pow += dc;
        r.add(mm, v);
    }
    return r;
}

DeltaExpression DeltaExpression::op_mul(const DeltaExpression& a, const DeltaExpression& b,
                                        unsigned K) {
    DeltaExpression r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.has_atom || mb.has_atom)
                throw numeric_error("op_mul is defined for operator expressions only");
            unsigned k = ma.delta_pow + mb.delta_pow;
            if (k > K)
                continue;
            AlienMono m;
            m.delta_pow = k;
            m.s_pow = ma.s_pow + mb.s_pow;
            m.e_pow = ma.e_pow + mb.e_pow;
            m.c_pow = ma.c_pow + mb.c_pow;
            r.add(m, ca * cb);
        }
    }
    return r;
}

DeltaExpression DeltaExpression::apply_op(const DeltaExpression& op, unsigned K) const {
    DeltaExpression r;
    for (const auto& [mo, co] : op.terms_) {
        if (mo.has_atom)
            throw numeric_error("apply_op: operator expression contains an atom");
        for (const auto& [mt, ct] : terms_) {
            AlienMono m = mt;
            m.delta_pow += mo.delta_pow;
            m.s_pow += mo.s_pow;
            m.e_pow += mo.e_pow;
            m.c_pow += mo.c_pow;
            if (m.has_atom ? (m.delta_pow + m.sector > K) : (m.delta_pow > K))
                continue;
            r.add(m, co * ct);
        }
    }
    return r;
}

DeltaExpression DeltaExpression::eliminate_minus(unsigned K) const {
    DeltaExpression r;
    for (const auto& [m, c] : terms_) {
        if (!m.has_atom || !m.minus) {
            r.add(m, c);
            continue;
        }
        AlienMono plus = m;
        plus.minus = false;
        r.add(plus, c);
        AlienMono up = plus;
        up.delta_pow += 1;
        if (up.delta_pow + up.sector <= K)
            r.add(up, c);
    }
    return r;
}

DeltaExpression DeltaExpression::truncate(unsigned K) const {
    DeltaExpression r;
    for (const auto& [m, c] : terms_) {
        unsigned grade = m.delta_pow + (m.has_atom ? m.sector : 0);
        if (grade <= K)
            r.add(m, c);
    }
    return r;
}

std::string DeltaExpression::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (m.s_pow)
            os << "*S^" << m.s_pow;
        if (m.e_pow)
            os << "*E^" << m.e_pow;
        if (m.c_pow)
            os << "*C^" << m.c_pow;
        if (m.delta_pow)
            os << "*d^" << m.delta_pow;
        if (m.has_atom)
            os << "*y" << m.sector << (m.minus ? "-" : "+");
    }
    return os.str();
}

DeltaExpression stokes_power(const Rational& alpha, unsigned K) {
    DeltaExpression e;
    for (unsigned j = 0; j <= K; ++j) {
        AlienMono m;
        m.delta_pow = j;
        e.add(m, binomial(alpha, j));
    }
    return e;
}

DeltaExpression alien_derivative_power(unsigned n, unsigned K) {
    if (n < 1)
        throw config_error("alien_derivative_power needs n >= 1");
    // log(1+delta) = sum_{j>=1} (-1)^{j-1} delta^j / j
    DeltaExpression log1p;
    for (unsigned j = 1; j <= K; ++j) {
        AlienMono m;
        m.delta_pow = j;
        log1p.add(m, Rational((j % 2) ? 1 : -1, static_cast<long>(j)));
    }
    DeltaExpression acc = log1p;
    for (unsigned i = 1; i < n; ++i)
        acc = DeltaExpression::op_mul(acc, log1p, K);
    return acc;
}

std::vector<Rational> delta_in_alien_powers(unsigned k, unsigned K) {
    // delta^k = (e^t - 1)^k = k! sum_{j>=k} S2(j,k) t^j / j!  with t = alien
    // derivative; Stirling numbers of the second kind by recurrence.
    if (k < 1 || k > K)
        throw config_error("delta_in_alien_powers needs 1 <= k <= K");
    std::vector<std::vector<Integer>> S2(K + 1, std::vector<Integer>(K + 1, Integer(0)));
    S2[0][0] = 1;
    for (unsigned j = 1; j <= K; ++j)
        for (unsigned i = 1; i <= j; ++i)
            S2[j][i] = S2[j - 1][i - 1] + Integer(static_cast<long>(i)) * S2[j - 1][i];
    std::vector<Rational> w;
    for (unsigned j = k; j <= K; ++j)
        w.push_back(factorial_rat(k) * Rational(S2[j][k]) / factorial_rat(j));
    return w;
}

Rational averaging_weight(unsigned p, unsigned q) {
    Rational num = Rational(factorial(2 * p)) * Rational(factorial(2 * q));
    Rational den = pow_rat(Rational(4), static_cast<long>(p + q)) * factorial_rat(p) *
                   factorial_rat(q) * factorial_rat(p + q);
    return num / den;
}

DeltaExpression balanced_average_residual(unsigned K) {
    if (K < 1)
        throw config_error("balanced_average_residual needs K >= 1");
    // Upper-lateral expansion of the balanced average:
    //   G^{1/2} A+ = A+ + sum_{n>=1} (-1)^{n-1} lambda_{n-1,1} delta^n A+
    DeltaExpression upper = DeltaExpression::atom(0, 0, false);
    for (unsigned n = 1; n <= K; ++n) {
        Rational c = averaging_weight(n - 1, 1);
        if (n % 2 == 0)
            c = -c;
        upper = upper + DeltaExpression::atom(n, 0, false).scaled(c);
    }
    // The same object through lower-lateral atoms:
    //   G^{-1/2} A- = sum_{n>=0} (-1)^n lambda_{n,0} delta^n A-
    DeltaExpression lower;
    for (unsigned n = 0; n <= K; ++n) {
        Rational c = averaging_weight(n, 0);
        if (n % 2 == 1)
            c = -c;
        lower = lower + DeltaExpression::atom(n, 0, true).scaled(c);
    }
    DeltaExpression residual = (upper - lower.eliminate_minus(K)).truncate(K);
    return residual;
}

namespace {

struct UnknownKey {
    unsigned sector;
    unsigned delta_pow;
    auto operator<=>(const UnknownKey&) const = default;
};

// Linear equation over the scaled unknowns u_{m,k} := S^m E^m delta^k y_m^+
// with pure-rational matrix entries; the right-hand side lives in the
// delta^n y_0^+ atoms.
struct BridgeEquation {
    std::map<UnknownKey, Rational> lhs;
    DeltaExpression rhs; // combination of delta^n y_0^+ atoms (no S/E powers)
};

} // namespace

Rational MedianCoefficientTable::coeff(unsigned c_pow, unsigned delta_pow) const {
    for (const auto& e : entries)
        if (e.c_pow == c_pow && e.delta_pow == delta_pow)
            return e.coeff;
    return Rational(0);
}

std::string MedianCoefficientTable::to_json() const {
    nlohmann::json j;
    j["K"] = K;
    j["pv_row"] = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        rows.push_back({{"c_pow", e.c_pow},
                        {"delta_pow", e.delta_pow},
                        {"s_pow", e.s_pow},
                        {"coeff", to_string(e.coeff)}});
    }
    j["entries"] = rows;
    return j.dump(2);
}

MedianCoefficientTable MedianCoefficientTable::from_json(const std::string& text) {
    MedianCoefficientTable t;
    try {
        auto j = nlohmann::json::parse(text);
        t.K = j.at("K").get<unsigned>();
        for (const auto& row : j.at("entries")) {
            MedianEntry e;
            e.c_pow = row.at("c_pow").get<unsigned>();
            e.delta_pow = row.at("delta_pow").get<unsigned>();
            e.s_pow = row.at("s_pow").get<int>();
            e.coeff = rational_from_string(row.at("coeff").get<std::string>());
            t.entries.push_back(e);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw config_error(std::string("bad median table JSON: ") + ex.what());
    }
    return t;
}

MedianCoefficientTable solve_bridge_system(unsigned K) {
    if (K < 1)
        throw config_error("solve_bridge_system needs K >= 1");

    const DeltaExpression ghalf = stokes_power(Rational(1, 2), K);

    // Unknowns: u_{m,k} = S^m E^m delta^k y_m^+ for m >= 1, k+m <= K.
    std::vector<UnknownKey> unknowns;
    for (unsigned m = 1; m <= K; ++m)
        for (unsigned k = 0; k + m <= K; ++k)
            unknowns.push_back({m, k});

    // One equation per (base sector m, alien power n):
    //   Delta^n G^{1/2} y_m^+ = ((m+n)!/m!) S^n E^n G^{1/2} y_{m+n}^+ ,
    // truncated at grade K, rescaled by S^m E^m so that every coefficient is
    // a pure rational and every atom delta^k y_j^+ appears as u_{j,k}.
    std::vector<BridgeEquation> equations;
    for (unsigned m = 0; m + 1 <= K; ++m) {
        for (unsigned n = 1; m + n <= K; ++n) {
            DeltaExpression lhs_op = DeltaExpression::op_mul(
                alien_derivative_power(n, K), ghalf, K);
            DeltaExpression lhs =
                DeltaExpression::atom(0, m, false).apply_op(lhs_op, K);
            DeltaExpression rhs =
                DeltaExpression::atom(0, m + n, false).apply_op(ghalf, K);
            Rational cmn = factorial_rat(m + n) / factorial_rat(m);

            BridgeEquation eq;
            // move everything to "lhs - rhs = 0"; unknown atoms to the matrix,
            // base-sector (m = 0) atoms to the right-hand side.
            auto ingest = [&](const DeltaExpression& expr, const Rational& scale) {
                for (const auto& [mono, c] : expr.terms()) {
                    Rational v = c * scale;
                    if (mono.sector == 0) {
                        AlienMono known = mono;
                        eq.rhs.add(known, -v);
                    } else {
                        eq.lhs[{mono.sector, mono.delta_pow}] += v;
                    }
                }
            };
            ingest(lhs, Rational(1));
            ingest(rhs, -cmn);
            // prune zero entries
            for (auto it = eq.lhs.begin(); it != eq.lhs.end();)
                it = (it->second == 0) ? eq.lhs.erase(it) : std::next(it);
            equations.push_back(std::move(eq));
        }
    }

    if (equations.size() != unknowns.size())
        throw numeric_error("bridge system is not square: " +
                            std::to_string(equations.size()) + " equations for " +
                            std::to_string(unknowns.size()) + " unknowns");

    // Exact Gaussian elimination; solution[u] is an expression in
    // delta^n y_0^+ atoms.
    const std::size_t N = unknowns.size();
    std::map<UnknownKey, std::size_t> col;
    for (std::size_t i = 0; i < N; ++i)
        col[unknowns[i]] = i;

    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N, Rational(0)));
    std::vector<DeltaExpression> rhs(N);
    for (std::size_t r = 0; r < N; ++r) {
        for (const auto& [key, v] : equations[r].lhs)
            A[r][col.at(key)] = v;
        rhs[r] = equations[r].rhs;
    }
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && A[piv][c] == 0)
            ++piv;
        if (piv == N)
            throw numeric_error("bridge system is singular (structural bug)");
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (std::size_t r = 0; r < N; ++r) {
            if (r == c || A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < N; ++k)
                A[r][k] -= f * A[c][k];
            rhs[r] = rhs[r] - rhs[c].scaled(f);
        }
    }
    std::vector<DeltaExpression> solution(N);
    for (std::size_t i = 0; i < N; ++i)
        solution[i] = rhs[i].scaled(Rational(1) / A[i][i]);

    // Medianized transseries: y_med = sum_m (C/S)^m sum_k binom(1/2,k) u_{m,k}
    // (the e^{-m lambda x} factors cancel against the scaled unknowns).
    // Row m = 0 is G^{1/2} y_0^+ directly.
    std::map<std::pair<unsigned, unsigned>, Rational> table; // (c_pow, delta_pow)
    DeltaExpression row0 = DeltaExpression::atom(0, 0, false).apply_op(ghalf, K);
    for (const auto& [mono, c] : row0.terms()) {
        if (!mono.has_atom || mono.sector != 0)
            throw numeric_error("unexpected term in C^0 row");
        table[{0u, mono.delta_pow}] += c;
    }
    for (std::size_t i = 0; i < N; ++i) {
        const auto& u = unknowns[i];
        Rational g = binomial(Rational(1, 2), u.delta_pow);
        if (g == 0)
            continue;
        for (const auto& [mono, c] : solution[i].terms()) {
            if (!mono.has_atom || mono.sector != 0)
                throw numeric_error("bridge solution contains unresolved atoms");
            table[{u.sector, mono.delta_pow}] += g * c;
        }
    }

    // The C^0 row must reduce to PV + corrections: PV = y0+ + (1/2) delta y0+.
    if (table[{0u, 0u}] != 1 || table[{0u, 1u}] != Rational(1, 2))
        throw numeric_error("C^0 row does not contain the principal-value combination");
    table.erase({0u, 0u});
    table.erase({0u, 1u});

    // Conversion to the real delta'/S' table: delta^k -> delta'^k verbatim;
    // 1/S^m -> realified(i^m)/S'^m with realified(i^m) in {+1,+1,-1,-1}.
    MedianCoefficientTable out;
    out.K = K;
    for (const auto& [key, c] : table) {
        auto [c_pow, delta_pow] = key;
        if (c == 0)
            continue;
        if (delta_pow >= K || c_pow >= K)
            continue; // O(delta'^K) truncation of the emitted table
        MedianEntry e;
        e.c_pow = c_pow;
        e.delta_pow = delta_pow;
        e.s_pow = -static_cast<int>(c_pow);
        int sign = (c_pow % 4 < 2) ? 1 : -1;
        e.coeff = c * Rational(sign);
        out.entries.push_back(e);
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const MedianEntry& a, const MedianEntry& b) {
                  return std::tie(a.c_pow, a.delta_pow) < std::tie(b.c_pow, b.delta_pow);
              });
    return out;
}

} // namespace resurgence
