#pragma once

#include <stdexcept>
#include <string>

namespace spcol {

// Duplicate or missing row during system assembly.
struct assembly_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Factorization or solve failed; `detail` names the suspected row when known.
struct singular_system_error : std::runtime_error {
    explicit singular_system_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Greville interpolation system could not be solved.
struct interpolation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spcol
