#include "resurgence/bigreal.hpp"

#include <cstdlib>

namespace resurgence {

std::string BigReal::str(long digits) const {
    if (digits <= 0)
        digits = prec_digits();
    if (is_nan())
        return "nan";
    if (!is_finite())
        return sign() > 0 ? "inf" : "-inf";
    if (is_zero())
        return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!m.empty() && m[0] == '-') {
        sign_part = "-";
        m.erase(0, 1);
    }
    // mpfr mantissa is 0.ddd... * 10^e ; render as d.dd...e(e-1)
    std::string out = sign_part + m.substr(0, 1);
    if (m.size() > 1)
        out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace resurgence
