// errors.hpp: exception types shared by every qisf module

#pragma once

#include <stdexcept>
#include <string>

namespace qisf {

// Precondition violated by a caller-supplied value (negative mass, T <= 0, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The physical model itself is inconsistent (non-PSD potential, zero mode in a well).
class model_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed to meet its own convergence or residual contract.
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qisf
