#pragma once

#include <stdexcept>
#include <string>

namespace qbs {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Argument inside the domain but outside the representable/supported range
// (overflow of a special function, |z| beyond a documented threshold).
class range_error : public error {
public:
    explicit range_error(const std::string& msg) : error(msg) {}
};

// An iterative method failed to reach its tolerance.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

// A function was handed an object violating its documented contract
// (e.g. a waveform without a declared tail form).
class contract_error : public error {
public:
    explicit contract_error(const std::string& msg) : error(msg) {}
};

// Matching denominator vanished; callers should switch to the
// cleared-denominator formulation.
class degenerate_matching : public error {
public:
    explicit degenerate_matching(const std::string& msg) : error(msg) {}
};

} // namespace qbs
