#pragma once

#include <stdexcept>
#include <string>

namespace altlin {

// A point left a map's declared domain, or an inverse iteration diverged.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chart-change Jacobian is numerically singular at the queried point.
struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Velocity Hessian of a Lagrangian lost invertibility.
struct SingularHessian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel extraction found two singular values too close to separate.
struct DegenerateKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An integrated state became non-finite or exceeded the configured bound.
struct NonFiniteState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scenario configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace altlin
