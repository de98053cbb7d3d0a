#include "resurgence/approximant.hpp"

#include <algorithm>

#include <json.hpp>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

Rational b0_of(LatticeKind kind) {
    return kind == LatticeKind::pole ? Rational(1) : Rational(1, 2);
}

} // namespace

const std::vector<Rational>& ResurgentApproximant::what_exact(std::size_t count) const {
    if (what_exact_.empty())
        what_exact_.push_back(Rational(1));
    // w'(z)/w(z) = b0 * sum_j g_j z^j with g_j = sum_n (n lambda)^{-(j+1)}
    while (what_exact_.size() < count) {
        std::size_t j = what_exact_.size() - 1; // producing w_{j+1}
        Rational s = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            Rational g = 0;
            for (unsigned n = 1; n <= Nprime; ++n)
                g += pow_rat(Rational(1) / (Rational(static_cast<long>(n)) * lambda),
                             static_cast<long>(i) + 1);
            s += b0_of(kind) * g * what_exact_[j - i];
        }
        what_exact_.push_back(s / Rational(static_cast<long>(j) + 1));
    }
    return what_exact_;
}

const std::vector<BigReal>& ResurgentApproximant::what_float(std::size_t count) const {
    if (what_float_.empty())
        what_float_.push_back(BigReal(1L, digits));
    while (what_float_.size() < count) {
        std::size_t j = what_float_.size() - 1;
        BigReal s(0L, digits);
        BigReal b0(b0_of(kind), digits);
        for (std::size_t i = 0; i <= j; ++i) {
            BigReal g(0L, digits);
            for (unsigned n = 1; n <= Nprime; ++n) {
                BigReal nl(Rational(static_cast<long>(n)) * lambda, digits);
                g += pow_si(nl, -(static_cast<long>(i) + 1));
            }
            s += b0 * g * what_float_[j - i];
        }
        what_float_.push_back(s / BigReal(static_cast<long>(j) + 1, digits));
    }
    return what_float_;
}

std::vector<Rational> ResurgentApproximant::taylor_exact(unsigned from, unsigned to) const {
    if (ctilde_exact.empty())
        throw numeric_error("approximant has no exact numerator (float inputs)");
    const auto& w = what_exact(to + 1);
    std::vector<Rational> out;
    for (unsigned k = from; k <= to; ++k) {
        Rational s = 0;
        for (std::size_t j = 0; j < ctilde_exact.size() && j <= k; ++j)
            s += ctilde_exact[j] * w[k - j];
        out.push_back(s);
    }
    return out;
}

std::vector<BigReal> ResurgentApproximant::taylor(unsigned from, unsigned to) const {
    if (!ctilde_exact.empty()) {
        auto ex = taylor_exact(from, to);
        return to_bigreal(ex, digits);
    }
    const auto& w = what_float(to + 1);
    std::vector<BigReal> out;
    for (unsigned k = from; k <= to; ++k) {
        BigReal s(0L, digits);
        for (std::size_t j = 0; j < ctilde.size() && j <= k; ++j)
            s += ctilde[j] * w[k - j];
        out.push_back(s);
    }
    return out;
}

std::vector<BigReal> ResurgentApproximant::original_numerator() const {
    // c_j = ctilde_j * prod (n lambda)^{b0}
    Rational prod = 1;
    for (unsigned n = 1; n <= Nprime; ++n)
        prod *= Rational(static_cast<long>(n)) * lambda;
    BigReal scale(prod, digits);
    if (kind == LatticeKind::sqrt_branch)
        scale = sqrt(scale);
    std::vector<BigReal> out;
    out.reserve(ctilde.size());
    for (const auto& c : ctilde)
        out.push_back(c * scale);
    return out;
}

BigComplex ResurgentApproximant::evaluate(const BigComplex& z) const {
    long d = std::max(digits, z.prec_digits());
    BigComplex num(BigReal(0L, d), BigReal(0L, d));
    for (auto it = ctilde.rbegin(); it != ctilde.rend(); ++it) {
        num = num * z;
        num.re += *it;
    }
    if (z.im.is_zero()) {
        auto [re, im] = realified_components(z.re);
        return {re, im};
    }
    BigComplex den(BigReal(1L, d), BigReal(0L, d));
    for (unsigned n = 1; n <= Nprime; ++n) {
        BigReal nl(Rational(static_cast<long>(n)) * lambda, d);
        BigComplex factor(BigReal(1L, d) - z.re / nl, -(z.im / nl));
        den = den * (kind == LatticeKind::pole ? factor : sqrt(factor));
    }
    return num / den;
}

std::pair<BigReal, BigReal> ResurgentApproximant::realified_components(
    const BigReal& z) const {
    long d = std::max(digits, z.prec_digits());
    BigReal num(0L, d);
    for (auto it = ctilde.rbegin(); it != ctilde.rend(); ++it)
        num = num * z + *it;

    BigReal prod(1L, d);
    unsigned flipped = 0;
    for (unsigned n = 1; n <= Nprime; ++n) {
        BigReal nl(Rational(static_cast<long>(n)) * lambda, d);
        BigReal f = BigReal(1L, d) - z / nl;
        if (f.is_zero())
            throw numeric_error("evaluation at lattice singularity z = " + nl.str(8));
        if (f.sign() < 0) {
            ++flipped;
            f = -f;
        }
        prod *= f;
    }
    if (kind == LatticeKind::pole) {
        BigReal v = num / prod;
        if (flipped % 2)
            v = -v;
        return {v, BigReal(0L, d)};
    }
    // branch: B = i^K num / sqrt(prod) with the z + i0 convention
    BigReal v = num / sqrt(prod);
    switch (flipped % 4) {
    case 0: return {v, BigReal(0L, d)};
    case 1: return {BigReal(0L, d), v};
    case 2: return {-v, BigReal(0L, d)};
    default: return {BigReal(0L, d), -v};
    }
}

BigReal ResurgentApproximant::realified(const BigReal& z) const {
    auto [re, im] = realified_components(z);
    return re + im;
}

BigReal ResurgentApproximant::local_amplitude(unsigned m) const {
    if (m < 1 || m > Nprime)
        throw config_error("local_amplitude: lattice index out of range");
    long d = digits;
    BigReal ml(Rational(static_cast<long>(m)) * lambda, d);
    BigReal num(0L, d);
    for (auto it = ctilde.rbegin(); it != ctilde.rend(); ++it)
        num = num * ml + *it;
    BigReal reg(1L, d);
    for (unsigned n = 1; n <= Nprime; ++n) {
        if (n == m)
            continue;
        BigReal f = abs(BigReal(1L, d) -
                        BigReal(Rational(static_cast<long>(m), static_cast<long>(n)), d));
        reg *= f;
    }
    if (kind == LatticeKind::pole) {
        // true signed residue-style amplitude: ra ~ c_m/(m lambda - z)
        BigReal signed_reg(1L, d);
        for (unsigned n = 1; n <= Nprime; ++n) {
            if (n == m)
                continue;
            signed_reg *= BigReal(1L, d) -
                          BigReal(Rational(static_cast<long>(m), static_cast<long>(n)), d);
        }
        return num * ml / signed_reg;
    }
    return num * sqrt(ml) / sqrt(reg);
}

std::string ResurgentApproximant::to_json() const {
    nlohmann::json j;
    j["kind"] = kind == LatticeKind::pole ? "pole" : "sqrt-branch";
    j["lambda"] = to_string(lambda);
    j["N"] = N;
    j["Nprime"] = Nprime;
    j["precision_digits"] = digits;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : original_numerator())
        cs.push_back(c.str());
    j["c"] = cs;
    return j.dump(2);
}

ResurgentApproximant ResurgentApproximant::from_json(const std::string& text) {
    ResurgentApproximant ra;
    try {
        auto j = nlohmann::json::parse(text);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "pole")
            ra.kind = LatticeKind::pole;
        else if (kind == "sqrt-branch")
            ra.kind = LatticeKind::sqrt_branch;
        else
            throw config_error("unknown approximant kind: " + kind);
        ra.lambda = rational_from_string(j.at("lambda").get<std::string>());
        ra.N = j.at("N").get<unsigned>();
        ra.Nprime = j.at("Nprime").get<unsigned>();
        ra.digits = j.at("precision_digits").get<long>();
        Rational prod = 1;
        for (unsigned n = 1; n <= ra.Nprime; ++n)
            prod *= Rational(static_cast<long>(n)) * ra.lambda;
        BigReal scale(prod, ra.digits);
        if (ra.kind == LatticeKind::sqrt_branch)
            scale = sqrt(scale);
        for (const auto& s : j.at("c"))
            ra.ctilde.push_back(BigReal(s.get<std::string>(), ra.digits) / scale);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("bad approximant JSON: ") + e.what());
    }
    return ra;
}

ResurgentApproximant build_approximant(const BorelSeries& borel, LatticeKind kind,
                                       unsigned Nprime, const Rational& lambda, long digits,
                                       bool exact) {
    if (borel.size() < 1)
        throw config_error("build_approximant needs at least one Borel coefficient");
    if (Nprime < 1)
        throw config_error("build_approximant needs N' >= 1");
    if (lambda <= 0)
        throw config_error("build_approximant needs lambda > 0");

    ResurgentApproximant ra;
    ra.kind = kind;
    ra.lambda = lambda;
    ra.N = static_cast<unsigned>(borel.size() - 1);
    ra.Nprime = Nprime;
    ra.digits = digits;

    if (exact) {
        const auto& w = ra.what_exact(borel.size());
        ra.ctilde_exact.resize(borel.size());
        for (std::size_t k = 0; k < borel.size(); ++k) {
            Rational s = borel.c[k];
            for (std::size_t j = 0; j < k; ++j)
                s -= ra.ctilde_exact[j] * w[k - j];
            ra.ctilde_exact[k] = s; // w_0 = 1
        }
        ra.ctilde = to_bigreal(ra.ctilde_exact, digits);
    } else {
        const auto& w = ra.what_float(borel.size());
        ra.ctilde.resize(borel.size(), BigReal(0L, digits));
        for (std::size_t k = 0; k < borel.size(); ++k) {
            BigReal s(borel.c[k], digits);
            for (std::size_t j = 0; j < k; ++j)
                s -= ra.ctilde[j] * w[k - j];
            ra.ctilde[k] = s;
        }
    }
    return ra;
}

RatioReport predicted_ratios(const ResurgentApproximant& ra, const BorelSeries& exact) {
    if (exact.size() <= ra.N + 1)
        throw config_error("predicted_ratios: exact series does not extend beyond N");
    RatioReport report;
    auto pred = ra.taylor(ra.N + 1, static_cast<unsigned>(exact.size() - 1));
    for (unsigned j = ra.N + 1; j < exact.size(); ++j) {
        RatioEntry e;
        e.index = j;
        e.predicted = pred[j - (ra.N + 1)];
        e.exact = BigReal(exact.c[j], ra.digits);
        if (exact.c[j] == 0) {
            e.exact_zero = true;
            e.ratio = BigReal(0L, ra.digits);
        } else {
            e.ratio = e.predicted / e.exact;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

unsigned select_pole_count(const BorelSeries& borel, LatticeKind kind, const Rational& lambda,
                           PoleCountRange range, long digits) {
    if (range.lo > range.hi || range.lo < 1)
        throw config_error("select_pole_count: empty search range");
    if (borel.size() < 2)
        throw config_error("select_pole_count needs one coefficient beyond the build window");

    BorelSeries train;
    train.c.assign(borel.c.begin(), borel.c.end() - 1);
    const Rational& test = borel.c.back();
    const unsigned test_index = static_cast<unsigned>(borel.size() - 1);

    std::optional<unsigned> best;
    BigReal best_dev(0L, digits);
    for (unsigned np = range.lo; np <= range.hi; ++np) {
        auto ra = build_approximant(train, kind, np, lambda, digits, /*exact=*/false);
        BigReal predicted = ra.taylor(test_index, test_index)[0];
        BigReal dev;
        if (test == 0) {
            dev = abs(predicted);
        } else {
            dev = abs(predicted / BigReal(test, digits) - BigReal(1L, digits));
        }
        if (!best || dev < best_dev) {
            best = np;
            best_dev = dev;
        }
    }
    return *best;
}

} // namespace resurgence
