#ifndef TOPOCS_ERRORS_HPP
#define TOPOCS_ERRORS_HPP

#include <stdexcept>

namespace topocs {

// Coordinate singularity (e.g. the (r cos theta)^{-2} pole of the printed
// Hamiltonian). Distinct from numeric-domain errors for exit-code mapping.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateProjectionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace topocs

#endif
