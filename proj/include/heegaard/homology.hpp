#pragma once

#include "heegaard/diagram.hpp"

#include <string>

namespace heegaard {

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_i | d_{i+1} and every d_i >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVector invariant_factors;

    Int torsion_order() const;
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^cols / (row span of `relations`).
AbelianGroup quotient_by_rows(const IntMatrix& relations);

/// D_ij = omega(minus_i, plus_j).
IntMatrix intersection_matrix(const HeegaardDiagramH1& d);

/// Cokernel of the intersection matrix.
AbelianGroup first_homology(const HeegaardDiagramH1& d);

/// Z^{2g} / (span minus + span plus); isomorphic to first_homology.
AbelianGroup first_homology_from_surface(const HeegaardDiagramH1& d);

/// Order of the torsion subgroup (1 for torsion-free groups).
Int torsion_order(const HeegaardDiagramH1& d);

/// Necessary condition for an embedding in S^4: the torsion order is a square.
bool hantzsche_square_test(const HeegaardDiagramH1& d);

}  // namespace heegaard
