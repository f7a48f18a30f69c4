#pragma once

// The torsion linking form of a diagram, computed from first principles and
// from the diagonalised boundary map, plus the hyperbolicity decision.

#include "heegaard/diagram.hpp"
#include "heegaard/finite_form.hpp"
#include "heegaard/homology.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace heegaard {

inline constexpr std::int64_t kDefaultHyperbolicBound = 10000;

/// Raised when an exhaustive search would exceed the caller's bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A class of Z^{2g} whose image in H_1 is torsion; `order` is exact.
struct TorsionClass {
    IntVector representative;
    Int order;
};

/// Generators of tor H_1 with orders equal to the invariant factors.
std::vector<TorsionClass> torsion_generators(const HeegaardDiagramH1& d);

/// Order of `representative` in H_1, or nullopt if it has infinite order.
std::optional<TorsionClass> torsion_class(const HeegaardDiagramH1& d, const IntVector& representative);

/// lambda(a, b) = omega(y, b) / order(a) mod 1, where order(a) * a = x + y with
/// x in span(minus), y in span(plus). Throws std::invalid_argument if either
/// class is not torsion.
QmodZ linking_number(const HeegaardDiagramH1& d, const TorsionClass& a, const TorsionClass& b);

struct LinkingForm {
    IntVector invariant_factors;
    std::vector<std::vector<QmodZ>> gram;

    std::size_t rank() const { return invariant_factors.size(); }
    Int order() const;
    bool is_symmetric() const;
    LinkingForm negated() const;
    FiniteForm to_finite(std::int64_t max_order) const;
};

/// Gram matrix of linking_number on torsion_generators(d).
LinkingForm linking_form(const HeegaardDiagramH1& d);

/// The form after L_plus is brought to a diagonal boundary map.
/// `pairs` holds (p_i, q_i) with 0 <= q_i < p_i, giving summands q_i / p_i.
/// When some 2-primary block cannot be split into cyclic orthogonal pieces,
/// that block is kept whole in `residual_orders` / `residual_gram`.
struct DiagonalPresentation {
    IntVector boundary_diagonal;  // Smith diagonal of the boundary map
    std::vector<std::pair<Int, Int>> pairs;
    IntVector residual_orders;
    std::vector<std::vector<QmodZ>> residual_gram;
    bool congruence_moves = false;  // true if the raw diagonal needed orthogonalisation

    bool fully_diagonal() const { return residual_orders.empty(); }
    LinkingForm as_form() const;
};

/// Group orders beyond this are left as residual data when the raw
/// presentation is not already diagonal.
inline constexpr std::int64_t kDiagonalizeEnumerationLimit = 1000000;

DiagonalPresentation diagonalize(const HeegaardDiagramH1& d);

/// Generators of A and B in coordinates over the form's generators.
struct HyperbolicSplit {
    std::vector<IntVector> generators_a;
    std::vector<IntVector> generators_b;
};

/// Exhaustive decision. Throws BoundExceeded if |tor| > bound.
std::optional<HyperbolicSplit> is_hyperbolic(const LinkingForm& lf, std::int64_t bound = kDefaultHyperbolicBound,
                                             unsigned threads = 1);

/// Sufficient check only: every summand q/p (p odd) pairs off with a
/// summand (p, -q). Never used as a decision.
bool pairs_off_hyperbolically(const DiagonalPresentation& presentation);

/// Maps split coordinates back to surface classes of `d`.
std::vector<TorsionClass> realize(const HeegaardDiagramH1& d, const std::vector<TorsionClass>& generators,
                                  const std::vector<IntVector>& coordinates);

enum class HduStatus { exists, absent, undetermined };

struct HduVerdict {
    AbelianGroup homology;
    bool integral_homology_sphere = false;
    bool z2_homology_sphere = false;
    bool hyperbolic = false;
    std::optional<HyperbolicSplit> split;
    /// For Z/2-homology spheres HDU <=> hyperbolic; otherwise only
    /// "not hyperbolic => no HDU diagram" is asserted.
    HduStatus hdu = HduStatus::undetermined;
};

HduVerdict hdu_verdict(const HeegaardDiagramH1& d, std::int64_t bound = kDefaultHyperbolicBound,
                       unsigned threads = 1);

const char* to_string(HduStatus s);

}  // namespace heegaard
