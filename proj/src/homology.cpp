#include "heegaard/homology.hpp"

#include <sstream>

namespace heegaard {

Int AbelianGroup::torsion_order() const {
    Int t = 1;
    for (const auto& d : invariant_factors) t *= d;
    return t;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroup quotient_by_rows(const IntMatrix& relations) {
    AbelianGroup g;
    if (relations.cols() == 0) return g;
    if (relations.rows() == 0) {
        g.free_rank = relations.cols();
        return g;
    }
    const SmithDecomposition sd = snf(relations);
    const IntVector diag = sd.diagonal();
    std::size_t rank = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) g.invariant_factors.push_back(d);
    }
    g.free_rank = relations.cols() - rank;
    return g;
}

IntMatrix intersection_matrix(const HeegaardDiagramH1& d) {
    const std::size_t g = d.genus();
    IntMatrix m(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        const IntVector mi = d.minus().row(i);
        for (std::size_t j = 0; j < g; ++j) m(i, j) = omega(mi, d.plus().row(j), g);
    }
    return m;
}

AbelianGroup first_homology(const HeegaardDiagramH1& d) {
    // Relations are the columns of D; the Smith invariants of D^T agree.
    return quotient_by_rows(intersection_matrix(d).transpose());
}

AbelianGroup first_homology_from_surface(const HeegaardDiagramH1& d) {
    return quotient_by_rows(vstack(d.minus().rows(), d.plus().rows()));
}

Int torsion_order(const HeegaardDiagramH1& d) { return first_homology(d).torsion_order(); }

bool hantzsche_square_test(const HeegaardDiagramH1& d) { return is_perfect_square(torsion_order(d)); }

}  // namespace heegaard
