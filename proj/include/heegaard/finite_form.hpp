#pragma once

// Symmetric bilinear forms with values in Q/Z on small finite abelian groups
// G = Z/n_1 + ... + Z/n_k. Everything here is exhaustive: element sets are
// materialised, so callers must keep |G| within an explicit bound.

#include "heegaard/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heegaard {

/// A rational reduced mod 1: 0 <= num < den, gcd(num, den) = 1.
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(const Int& num, const Int& den);

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }
    bool is_zero() const { return num_ == 0; }

    QmodZ operator-() const { return QmodZ(-num_, den_); }
    friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return a + (-b); }
    friend QmodZ operator*(const Int& k, const QmodZ& a) { return QmodZ(k * a.num_, a.den_); }
    friend bool operator==(const QmodZ&, const QmodZ&) = default;

    /// "num/den"; zero is "0/1".
    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

class FiniteForm {
public:
    using Element = std::vector<std::int64_t>;

    FiniteForm() = default;
    /// lambda(e_i, e_j) = gram[i][j] / scale. Throws if a value is not
    /// well defined on the cyclic factors or the matrix is not symmetric.
    FiniteForm(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> gram,
               std::int64_t scale);

    /// Builds from exact rational values. Throws std::length_error when the
    /// group order exceeds `max_order`.
    static FiniteForm from_rational(const IntVector& orders, const std::vector<std::vector<QmodZ>>& gram,
                                    std::int64_t max_order);

    const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    std::int64_t size() const noexcept { return size_; }
    std::int64_t scale() const noexcept { return scale_; }
    std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    Element element(std::int64_t index) const;
    std::int64_t index(const Element& e) const;
    Element add(const Element& a, const Element& b) const;
    Element multiply(const Element& a, std::int64_t k) const;
    std::int64_t order(const Element& e) const;

    /// Numerator of lambda(a, b) over scale(), in [0, scale).
    std::int64_t pair(const Element& a, const Element& b) const;
    QmodZ value(const Element& a, const Element& b) const;

    bool is_nonsingular() const;
    FiniteForm negated() const;

    /// lambda restricted to the l-primary part, on generators (n_i / l^v_i) e_i.
    struct PrimaryPart {
        std::int64_t prime;
        std::vector<std::size_t> source;        // generator index in the parent
        std::vector<std::int64_t> multiplier;   // n_i / l^v_i
        std::vector<std::int64_t> part_orders;  // l^v_i
        Element lift(const Element& e, const FiniteForm& parent) const;
    };
    std::vector<PrimaryPart> primary_parts() const;
    FiniteForm restrict_to(const PrimaryPart& part) const;

private:
    std::vector<std::int64_t> orders_;
    std::vector<std::vector<std::int64_t>> gram_;
    std::int64_t scale_ = 1;
    std::int64_t size_ = 1;
};

/// Exhaustive generator matching. `b` must be nonsingular.
bool isomorphic(const FiniteForm& a, const FiniteForm& b);

struct FormSplit {
    std::vector<FiniteForm::Element> a;  // generators of A
    std::vector<FiniteForm::Element> b;  // generators of B
};

/// A = A_l, B = B_l per primary part; the witness is the first in the
/// canonical enumeration order regardless of `threads`.
std::optional<FormSplit> find_hyperbolic_split(const FiniteForm& form, unsigned threads = 1);

/// Checks a claimed split by enumeration: isotropy, trivial intersection, |A||B| = |G|.
bool verify_split(const FiniteForm& form, const FormSplit& split);

struct CyclicPiece {
    std::int64_t order;
    QmodZ value;
    FiniteForm::Element generator;
};

/// Greedy orthogonal splitting of a primary form into cyclic pieces. Always
/// succeeds for odd primes; nullopt when a 2-primary block has no element of
/// maximal order whose self-linking has maximal denominator.
std::optional<std::vector<CyclicPiece>> greedy_cyclic_pieces(const FiniteForm& primary);

/// Sums the i-th largest pieces of each prime into one cyclic piece; the
/// result is ordered by increasing order (an invariant-factor chain).
/// Pieces must already be expressed in `parent` coordinates.
std::vector<CyclicPiece> merge_coprime_pieces(const FiniteForm& parent,
                                              std::vector<std::vector<CyclicPiece>> per_prime);

/// Whole-form diagonalisation: greedy on every primary part, then merged.
std::optional<std::vector<CyclicPiece>> orthogonal_cyclic_pieces(const FiniteForm& form);

}  // namespace heegaard
