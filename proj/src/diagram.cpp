#include "heegaard/diagram.hpp"

#include <stdexcept>

namespace heegaard {

HeegaardDiagramH1::HeegaardDiagramH1(Lagrangian minus, Lagrangian plus)
    : minus_(std::move(minus)), plus_(std::move(plus)) {
    if (minus_.genus() != plus_.genus())
        throw std::invalid_argument("HeegaardDiagramH1: Lagrangians have different genus");
}

HeegaardDiagramH1 HeegaardDiagramH1::empty() {
    return HeegaardDiagramH1(Lagrangian(0, IntMatrix(0, 0)), Lagrangian(0, IntMatrix(0, 0)));
}

HeegaardDiagramH1 from_gluing(const SymplecticMap& f) {
    Lagrangian minus = Lagrangian::meridians(f.genus());
    Lagrangian plus = apply_map(f, minus);
    return HeegaardDiagramH1(std::move(minus), std::move(plus));
}

namespace {

// Rows of `l` re-embedded at genus `to`, followed by `extra` rows.
Lagrangian extend(const Lagrangian& l, std::size_t to, std::size_t offset,
                  const std::vector<IntVector>& extra) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < l.genus(); ++i)
        rows.push_back(embed_vector(l.row(i), l.genus(), offset, to));
    rows.insert(rows.end(), extra.begin(), extra.end());
    return Lagrangian(to, IntMatrix::from_rows(rows, 2 * to));
}

IntVector unit(std::size_t index, std::size_t genus) {
    IntVector v(2 * genus);
    v[index] = 1;
    return v;
}

}  // namespace

HeegaardDiagramH1 bar_stabilize(const HeegaardDiagramH1& d, std::size_t k) {
    if (k == 0) return d;
    const std::size_t g = d.genus();
    const std::size_t n = g + k;
    std::vector<IntVector> meridians, longitudes;
    for (std::size_t i = g; i < n; ++i) {
        meridians.push_back(unit(i, n));
        longitudes.push_back(unit(n + i, n));
    }
    return HeegaardDiagramH1(extend(d.minus(), n, 0, meridians), extend(d.plus(), n, 0, longitudes));
}

HeegaardDiagramH1 hat_stabilize(const HeegaardDiagramH1& d, std::size_t k_prime) {
    if (k_prime == 0) return d;
    const std::size_t g = d.genus();
    const std::size_t n = g + k_prime;
    std::vector<IntVector> meridians;
    for (std::size_t i = g; i < n; ++i) meridians.push_back(unit(i, n));
    return HeegaardDiagramH1(extend(d.minus(), n, 0, meridians), extend(d.plus(), n, 0, meridians));
}

HeegaardDiagramH1 connected_sum(const HeegaardDiagramH1& a, const HeegaardDiagramH1& b) {
    const std::size_t n = a.genus() + b.genus();
    auto sum = [&](const Lagrangian& la, const Lagrangian& lb) {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < la.genus(); ++i)
            rows.push_back(embed_vector(la.row(i), la.genus(), 0, n));
        for (std::size_t i = 0; i < lb.genus(); ++i)
            rows.push_back(embed_vector(lb.row(i), lb.genus(), la.genus(), n));
        return Lagrangian(n, IntMatrix::from_rows(rows, 2 * n));
    };
    return HeegaardDiagramH1(sum(a.minus(), b.minus()), sum(a.plus(), b.plus()));
}

HeegaardDiagramH1 lens(const Int& p, const Int& q) {
    if (p <= 0) throw std::invalid_argument("lens: p must be positive");
    Int r = q % p;
    if (r < 0) r += p;
    if (gcd(p, r) != 1) throw std::invalid_argument("lens: p and q must be coprime");
    IntMatrix minus(1, 2), plus(1, 2);
    minus(0, 0) = 1;
    plus(0, 0) = r;
    plus(0, 1) = p;
    return HeegaardDiagramH1(Lagrangian(1, std::move(minus)), Lagrangian(1, std::move(plus)));
}

HeegaardDiagramH1 mirror(const HeegaardDiagramH1& d) {
    const std::size_t g = d.genus();
    auto reflect = [g](const Lagrangian& l) {
        IntMatrix rows = l.rows();
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) rows(i, j) = -rows(i, j);
        return Lagrangian(g, std::move(rows));
    };
    return HeegaardDiagramH1(reflect(d.minus()), reflect(d.plus()));
}

HeegaardDiagramH1 b_fixture() {
    // Coordinates (x1, x2, x3, p1, p2, p3).
    Lagrangian minus(3, IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
    Lagrangian plus(3, IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 2}, {0, 0, 1, 0, 2, 0}});
    return HeegaardDiagramH1(std::move(minus), std::move(plus));
}

}  // namespace heegaard
