#pragma once

// Homological shadow of a Heegaard diagram: two Lagrangians of Z^{2g}.
// `minus` is the red / lower system, `plus` the blue / upper one.

#include "heegaard/symplectic.hpp"

namespace heegaard {

class HeegaardDiagramH1 {
public:
    HeegaardDiagramH1(Lagrangian minus, Lagrangian plus);

    /// Genus-0 diagram of S^3.
    static HeegaardDiagramH1 empty();

    std::size_t genus() const noexcept { return minus_.genus(); }
    const Lagrangian& minus() const noexcept { return minus_; }
    const Lagrangian& plus() const noexcept { return plus_; }

    friend bool operator==(const HeegaardDiagramH1& a, const HeegaardDiagramH1& b) = default;

private:
    Lagrangian minus_;
    Lagrangian plus_;
};

/// minus = meridians, plus = F(meridians).
HeegaardDiagramH1 from_gluing(const SymplecticMap& f);

/// Adds k handles with a new meridian in minus and the dual longitude in plus.
HeegaardDiagramH1 bar_stabilize(const HeegaardDiagramH1& d, std::size_t k);

/// Adds k' handles whose meridian lies in both Lagrangians (# S^1 x S^2).
HeegaardDiagramH1 hat_stabilize(const HeegaardDiagramH1& d, std::size_t k_prime);

HeegaardDiagramH1 connected_sum(const HeegaardDiagramH1& a, const HeegaardDiagramH1& b);

/// Genus-1 diagram minus = (1, 0), plus = (q, p), q normalised into [0, p).
/// Throws std::invalid_argument unless p > 0 and gcd(p, q) = 1.
HeegaardDiagramH1 lens(const Int& p, const Int& q);

/// Orientation reversal: the reflection x -> -x applied to both Lagrangians.
HeegaardDiagramH1 mirror(const HeegaardDiagramH1& d);

/// Genus-3 homological model of the torus bundle with monodromy -1:
/// minus = {x1, x2, x3}, plus = {x1, x2 + 2 p3, x3 + 2 p2}.
HeegaardDiagramH1 b_fixture();

}  // namespace heegaard
