#pragma once

#include <stdexcept>
#include <string>

namespace z2vqe {

// Problem size exceeds what the requested method can handle.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver failed to converge; carries the best estimate found.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
    double best_estimate;
};

// Invalid or inconsistent user configuration.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace z2vqe
