#pragma once

// The symplectic lattice (Z^{2g}, omega) in the fixed basis
// (x_1..x_g, p_1..p_g): omega(x_i, p_j) = delta_ij = -omega(p_j, x_i).
// Curve classes are column vectors under maps; Lagrangians store them as rows.

#include "heegaard/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace heegaard {

Int omega(const IntVector& u, const IntVector& v, std::size_t genus);

/// Gram matrix J of omega.
IntMatrix symplectic_gram(std::size_t genus);

bool is_symplectic_map(const IntMatrix& f, std::size_t genus);

/// Human-readable reason the rows fail to span a Lagrangian, or nullopt.
std::optional<std::string> lagrangian_violation(const IntMatrix& rows, std::size_t genus);

bool is_lagrangian(const IntMatrix& rows, std::size_t genus);

class SymplecticMap {
public:
    /// Throws std::invalid_argument unless f^T J f = J.
    SymplecticMap(std::size_t genus, IntMatrix f);

    static SymplecticMap identity(std::size_t genus);
    static SymplecticMap rotation();  // x -> -p, p -> x
    static SymplecticMap shear();     // x -> x + p

    std::size_t genus() const noexcept { return genus_; }
    const IntMatrix& matrix() const noexcept { return f_; }
    IntVector apply(const IntVector& v) const { return f_.apply(v); }

    friend SymplecticMap operator*(const SymplecticMap& a, const SymplecticMap& b);
    friend bool operator==(const SymplecticMap& a, const SymplecticMap& b) = default;

private:
    std::size_t genus_;
    IntMatrix f_;
};

class Lagrangian {
public:
    /// Throws std::invalid_argument naming the failed invariant.
    Lagrangian(std::size_t genus, IntMatrix rows);

    /// Rows x_1, ..., x_g.
    static Lagrangian meridians(std::size_t genus);

    std::size_t genus() const noexcept { return genus_; }
    const IntMatrix& rows() const noexcept { return rows_; }
    IntVector row(std::size_t i) const { return rows_.row(i); }

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) = default;

private:
    std::size_t genus_;
    IntMatrix rows_;
};

Lagrangian apply_map(const SymplecticMap& f, const Lagrangian& l);

/// Copies a genus-`from` vector into genus `to`, placing its coordinates in
/// handles [offset, offset + from).
IntVector embed_vector(const IntVector& v, std::size_t from, std::size_t offset, std::size_t to);

/// Symplectic direct sum: `a` on the first handles, `b` on the following ones.
SymplecticMap direct_sum(const SymplecticMap& a, const SymplecticMap& b);

/// F extended by k blocks m_i -> l_i, l_i -> -m_i.
SymplecticMap bar_stabilize_map(const SymplecticMap& f, std::size_t k);

/// Bar-stabilize by k, then extend by the identity on k_prime more handles.
SymplecticMap hat_stabilize_map(const SymplecticMap& f, std::size_t k, std::size_t k_prime);

/// Transvection u -> u + sign * omega(u, v) v.
SymplecticMap transvection(const IntVector& v, std::size_t genus, int sign = 1);

/// Random word of `length` transvections along x_i, p_i and x_i + x_j.
SymplecticMap random_symplectic_map(std::size_t genus, std::size_t length, std::uint64_t seed);

}  // namespace heegaard
