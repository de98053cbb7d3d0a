#include "resurgence/ode.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resurgence/errors.hpp"

namespace resurgence {

void NormalFormODE::validate() const {
    if (lambda <= 0)
        throw config_error("lambda must be positive");
    for (const auto& [m, f] : forcing) {
        if (m < 1)
            throw config_error("forcing powers must satisfy m >= 1");
        (void)f;
    }
    for (const auto& t : nonlinear) {
        if (t.n < 2)
            throw config_error("nonlinear terms must have n >= 2");
    }
}

double NormalFormODE::rhs(double x, double y) const {
    double v = -lambda.get_d() * y - a_lin.get_d() * y / x;
    for (const auto& [m, f] : forcing)
        v += f.get_d() * std::pow(x, -static_cast<double>(m));
    for (const auto& t : nonlinear)
        v += t.k.get_d() * std::pow(y, static_cast<double>(t.n)) *
             std::pow(x, -static_cast<double>(t.m));
    return v;
}

namespace {

using nlohmann::json;

NormalFormODE parse(const json& j) {
    NormalFormODE ode;
    try {
        ode.lambda = rational_from_string(j.at("lambda").get<std::string>());
        ode.a_lin = rational_from_string(j.at("A").get<std::string>());
        if (j.contains("forcing")) {
            for (const auto& [key, val] : j.at("forcing").items()) {
                unsigned m = static_cast<unsigned>(std::stoul(key));
                ode.forcing[m] = rational_from_string(val.get<std::string>());
            }
        }
        if (j.contains("nonlinear")) {
            for (const auto& t : j.at("nonlinear")) {
                NonlinearTerm term;
                term.n = t.at("n").get<unsigned>();
                term.m = t.at("m").get<unsigned>();
                term.k = rational_from_string(t.at("k").get<std::string>());
                ode.nonlinear.push_back(term);
            }
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("bad ODE spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("bad ODE spec: ") + e.what());
    }
    ode.validate();
    return ode;
}

} // namespace

NormalFormODE ode_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("ODE spec is not valid JSON: ") + e.what());
    }
    return parse(j);
}

std::string ode_to_json(const NormalFormODE& ode) {
    nlohmann::json j;
    j["lambda"] = to_string(ode.lambda);
    j["A"] = to_string(ode.a_lin);
    nlohmann::json forcing = nlohmann::json::object();
    for (const auto& [m, f] : ode.forcing)
        forcing[std::to_string(m)] = to_string(f);
    j["forcing"] = forcing;
    nlohmann::json nl = nlohmann::json::array();
    for (const auto& t : ode.nonlinear)
        nl.push_back({{"n", t.n}, {"m", t.m}, {"k", to_string(t.k)}});
    j["nonlinear"] = nl;
    return j.dump(2);
}

NormalFormODE ode_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open ODE spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ode_from_json(ss.str());
}

std::string builtin_ode_json(const std::string& name) {
    // y' = -y + 1/x
    if (name == "euler")
        return R"({"lambda":"1","A":"0","forcing":{"1":"1"},"nonlinear":[]})";
    // y' = -y + y^2 + 1/x
    if (name == "ode-simple")
        return R"({"lambda":"1","A":"0","forcing":{"1":"1"},"nonlinear":[{"n":2,"m":0,"k":"1"}]})";
    // y' = -y + y^3 + 1/x
    if (name == "ode-cubic")
        return R"({"lambda":"1","A":"0","forcing":{"1":"1"},"nonlinear":[{"n":3,"m":0,"k":"1"}]})";
    // y' = -y - (1/2) y/x + y^2 + 1/x
    if (name == "ode-branch")
        return R"({"lambda":"1","A":"1/2","forcing":{"1":"1"},"nonlinear":[{"n":2,"m":0,"k":"1"}]})";
    // y' = -y - (2/3) y/x + y^2/x + 3/x + 1/(4x^2)
    if (name == "prototype")
        return R"({"lambda":"1","A":"2/3","forcing":{"1":"3","2":"1/4"},"nonlinear":[{"n":2,"m":1,"k":"1"}]})";
    throw config_error("unknown built-in ODE: '" + name + "'");
}

NormalFormODE builtin_ode(const std::string& name) {
    return ode_from_json(builtin_ode_json(name));
}

std::vector<std::string> builtin_ode_names() {
    return {"euler", "ode-simple", "ode-cubic", "ode-branch", "prototype"};
}

} // namespace resurgence
