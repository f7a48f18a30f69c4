#pragma once

// Bounded searches over Lagrangians: genus-1 torsion forms, the UB_0 scan,
// and the search for a Lagrangian L with |tor Z^{2g}/(L + theta L)| non-square.

#include "heegaard/symplectic.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace heegaard {

/// (A, B, C) with det[v | F v] = +-(A a^2 + B ab + C b^2) for v = (a, b);
/// the sign is fixed so the first nonzero coefficient is positive.
std::array<Int, 3> genus1_torsion_form(const SymplecticMap& f);

/// |det[v | F v]| for v = (a, b).
Int genus1_torsion(const SymplecticMap& f, const Int& a, const Int& b);

struct Ub0Entry {
    Int a;
    Int b;
    Int torsion;
};

struct Ub0Scan {
    std::vector<Ub0Entry> squares;  // nonzero perfect squares
    std::vector<Ub0Entry> zeros;
    std::size_t examined = 0;
};

/// Primitive (a, b) with 0 < max(|a|, |b|) <= bound, one of each +-pair
/// (first nonzero coordinate positive), in increasing (a, b) order.
Ub0Scan ub0_scan(const SymplecticMap& f, std::int64_t bound);

/// Every Lagrangian whose Hermite form has entries in [-N, N], ordered
/// lexicographically on row-major entries under 0 < 1 < -1 < 2 < -2 < ...
std::vector<Lagrangian> enumerate_lagrangians(std::size_t genus, std::int64_t n);

struct QCandidate {
    std::size_t torsion_free_rank = 0;
    Int torsion;
};

/// Invariants of Z^{2g} / (L + theta L).
QCandidate q_candidate(const SymplecticMap& theta, const Lagrangian& l);

struct QSearchResult {
    enum class Status { found, exhausted };
    Status status = Status::exhausted;
    std::optional<Lagrangian> witness;
    Int witness_torsion = 0;
    std::int64_t bound = 0;
    std::size_t candidates = 0;  // size of the enumerated stream
    std::size_t examined = 0;    // stream prefix up to and including the witness
    std::size_t zero_count = 0;  // examined candidates with positive free rank
};

/// Least candidate (in enumerate_lagrangians order) whose torsion order is
/// not a square. The answer does not depend on `threads`.
QSearchResult question_q_search(const SymplecticMap& theta, std::int64_t n, unsigned threads = 1);

/// Named gluing maps accepted by the search front ends: "rotation", "shear",
/// "identity", "ub0"; for genus > 1 they are extended by the identity.
SymplecticMap named_map(const std::string& name, std::size_t genus);

}  // namespace heegaard
