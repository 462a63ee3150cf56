#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"

namespace modcone {

// Presentation of a tangent cone: ambient variables, generating ideal, the
// dimension of the smooth free factor, and the declared numerical data.
struct ConePresentation {
  RingPtr ring;  // ambient variables in their declared order
  std::vector<Polynomial> equations;
  unsigned free_dim = 0;
  Integer declared_multiplicity = 1;
  unsigned tangent_space_dim = 0;

  const std::vector<std::string>& variables() const { return ring->names(); }

  void validate() const {
    if (!ring) throw std::logic_error("ConePresentation: missing ring");
    if (declared_multiplicity < 1)
      throw std::logic_error("ConePresentation: multiplicity must be >= 1");
    for (const auto& eq : equations)
      if (!same_ring(eq.ring(), ring))
        throw std::logic_error("ConePresentation: equation uses foreign variables");
  }
};

}  // namespace modcone
