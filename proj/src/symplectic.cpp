#include "heegaard/symplectic.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace heegaard {

Int omega(const IntVector& u, const IntVector& v, std::size_t genus) {
    if (u.size() != 2 * genus || v.size() != 2 * genus)
        throw std::invalid_argument("omega: vectors must have length 2g");
    Int s = 0;
    for (std::size_t i = 0; i < genus; ++i) s += u[i] * v[genus + i] - u[genus + i] * v[i];
    return s;
}

IntMatrix symplectic_gram(std::size_t genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j(i, genus + i) = 1;
        j(genus + i, i) = -1;
    }
    return j;
}

bool is_symplectic_map(const IntMatrix& f, std::size_t genus) {
    if (f.rows() != 2 * genus || f.cols() != 2 * genus)
        throw std::invalid_argument("is_symplectic_map: matrix must be 2g x 2g");
    const IntMatrix j = symplectic_gram(genus);
    return f.transpose() * j * f == j;
}

std::optional<std::string> lagrangian_violation(const IntMatrix& rows, std::size_t genus) {
    if (rows.rows() != genus || rows.cols() != 2 * genus)
        throw std::invalid_argument("is_lagrangian: rows must be g x 2g");
    for (std::size_t i = 0; i < genus; ++i)
        for (std::size_t j = i + 1; j < genus; ++j) {
            const Int w = omega(rows.row(i), rows.row(j), genus);
            if (w != 0) {
                std::ostringstream os;
                os << "omega(row " << i + 1 << ", row " << j + 1 << ") = " << w << ", expected 0";
                return os.str();
            }
        }
    if (genus == 0) return std::nullopt;
    const IntVector d = snf(rows).diagonal();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 1) {
            std::ostringstream os;
            if (d[i] == 0)
                os << "rows are linearly dependent (rank " << i << " < " << genus << ")";
            else
                os << "row lattice is imprimitive (invariant factor " << d[i] << ")";
            return os.str();
        }
    return std::nullopt;
}

bool is_lagrangian(const IntMatrix& rows, std::size_t genus) {
    return !lagrangian_violation(rows, genus).has_value();
}

SymplecticMap::SymplecticMap(std::size_t genus, IntMatrix f) : genus_(genus), f_(std::move(f)) {
    if (!is_symplectic_map(f_, genus_))
        throw std::invalid_argument("SymplecticMap: matrix does not preserve omega");
}

SymplecticMap SymplecticMap::identity(std::size_t genus) {
    return SymplecticMap(genus, IntMatrix::identity(2 * genus));
}

SymplecticMap SymplecticMap::rotation() { return SymplecticMap(1, IntMatrix{{0, 1}, {-1, 0}}); }

SymplecticMap SymplecticMap::shear() { return SymplecticMap(1, IntMatrix{{1, 0}, {1, 1}}); }

SymplecticMap operator*(const SymplecticMap& a, const SymplecticMap& b) {
    if (a.genus_ != b.genus_) throw std::invalid_argument("SymplecticMap product: genus mismatch");
    return SymplecticMap(a.genus_, a.f_ * b.f_);
}

Lagrangian::Lagrangian(std::size_t genus, IntMatrix rows) : genus_(genus), rows_(std::move(rows)) {
    if (auto why = lagrangian_violation(rows_, genus_))
        throw std::invalid_argument("not a Lagrangian: " + *why);
}

Lagrangian Lagrangian::meridians(std::size_t genus) {
    IntMatrix rows(genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) rows(i, i) = 1;
    return Lagrangian(genus, std::move(rows));
}

Lagrangian apply_map(const SymplecticMap& f, const Lagrangian& l) {
    if (f.genus() != l.genus()) throw std::invalid_argument("apply_map: genus mismatch");
    return Lagrangian(l.genus(), (f.matrix() * l.rows().transpose()).transpose());
}

IntVector embed_vector(const IntVector& v, std::size_t from, std::size_t offset, std::size_t to) {
    if (v.size() != 2 * from || offset + from > to)
        throw std::invalid_argument("embed_vector: bad dimensions");
    IntVector out(2 * to);
    for (std::size_t i = 0; i < from; ++i) {
        out[offset + i] = v[i];
        out[to + offset + i] = v[from + i];
    }
    return out;
}

namespace {

// Index of coordinate c of a genus-`from` vector placed at `offset` in genus `to`.
std::size_t embed_index(std::size_t c, std::size_t from, std::size_t offset, std::size_t to) {
    return c < from ? offset + c : to + offset + (c - from);
}

}  // namespace

SymplecticMap direct_sum(const SymplecticMap& a, const SymplecticMap& b) {
    const std::size_t ga = a.genus();
    const std::size_t gb = b.genus();
    const std::size_t g = ga + gb;
    IntMatrix m(2 * g, 2 * g);
    for (std::size_t i = 0; i < 2 * ga; ++i)
        for (std::size_t j = 0; j < 2 * ga; ++j)
            m(embed_index(i, ga, 0, g), embed_index(j, ga, 0, g)) = a.matrix()(i, j);
    for (std::size_t i = 0; i < 2 * gb; ++i)
        for (std::size_t j = 0; j < 2 * gb; ++j)
            m(embed_index(i, gb, ga, g), embed_index(j, gb, ga, g)) = b.matrix()(i, j);
    return SymplecticMap(g, std::move(m));
}

SymplecticMap bar_stabilize_map(const SymplecticMap& f, std::size_t k) {
    if (k == 0) return f;
    IntMatrix block(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        block(k + i, i) = 1;   // m_i -> l_i
        block(i, k + i) = -1;  // l_i -> -m_i
    }
    return direct_sum(f, SymplecticMap(k, std::move(block)));
}

SymplecticMap hat_stabilize_map(const SymplecticMap& f, std::size_t k, std::size_t k_prime) {
    SymplecticMap bar = bar_stabilize_map(f, k);
    if (k_prime == 0) return bar;
    return direct_sum(bar, SymplecticMap::identity(k_prime));
}

SymplecticMap transvection(const IntVector& v, std::size_t genus, int sign) {
    // Column j is the image of basis vector e_j: e_j + sign * omega(e_j, v) v.
    IntMatrix m = IntMatrix::identity(2 * genus);
    for (std::size_t j = 0; j < 2 * genus; ++j) {
        // omega(e_j, v) = v[g+j] for j < g, -v[j-g] otherwise.
        const Int w = j < genus ? v[genus + j] : Int(-v[j - genus]);
        for (std::size_t i = 0; i < 2 * genus; ++i) m(i, j) += sign * w * v[i];
    }
    return SymplecticMap(genus, std::move(m));
}

SymplecticMap random_symplectic_map(std::size_t genus, std::size_t length, std::uint64_t seed) {
    std::vector<IntVector> axes;
    for (std::size_t i = 0; i < genus; ++i) {
        IntVector x(2 * genus), p(2 * genus);
        x[i] = 1;
        p[genus + i] = 1;
        axes.push_back(x);
        axes.push_back(p);
        for (std::size_t j = i + 1; j < genus; ++j) {
            IntVector xx(2 * genus);
            xx[i] = 1;
            xx[j] = 1;
            axes.push_back(xx);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, axes.size() - 1);
    std::bernoulli_distribution flip(0.5);
    SymplecticMap f = SymplecticMap::identity(genus);
    for (std::size_t step = 0; step < length && !axes.empty(); ++step)
        f = transvection(axes[pick(rng)], genus, flip(rng) ? 1 : -1) * f;
    return f;
}

}  // namespace heegaard
