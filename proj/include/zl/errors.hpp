#pragma once

#include <stdexcept>
#include <string>

namespace zl {

// Thrown when an iterative solver or adaptive scheme fails to reach its
// tolerance within its iteration/depth cap.  For the bracketed solvers this
// signals a bug, not a data problem.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace zl
