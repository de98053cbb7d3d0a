#ifndef RESURGENCE_ERRORS_HPP
#define RESURGENCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace resurgence {

// Bad input: malformed JSON, violated invariants, impossible options.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical stage failed (root finder, quadrature, singular system, ...).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The pipeline met a structure it deliberately does not resum (e.g. b = 1/3).
class unsupported_structure_error : public std::runtime_error {
public:
    explicit unsupported_structure_error(const std::string& msg) : std::runtime_error(msg) {}
};

class resonance_error : public numeric_error {
public:
    resonance_error(const std::string& msg, unsigned order)
        : numeric_error(msg), order(order) {}
    unsigned order;
};

class pade_error : public numeric_error {
public:
    explicit pade_error(const std::string& msg) : numeric_error(msg) {}
};

class rootfinding_error : public numeric_error {
public:
    explicit rootfinding_error(const std::string& msg) : numeric_error(msg) {}
};

class quadrature_error : public numeric_error {
public:
    quadrature_error(const std::string& msg, double achieved)
        : numeric_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

} // namespace resurgence

#endif
