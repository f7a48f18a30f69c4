#pragma once

// Reference computations used by the tests. Everything here is written
// independently of the library algorithms it checks: cofactor determinants,
// invariant factors from determinantal divisors, and subgroup brute force.

#include "heegaard/diagram.hpp"
#include "heegaard/finite_form.hpp"
#include "heegaard/homology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using heegaard::Int;
using heegaard::IntMatrix;
using heegaard::IntVector;

inline Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = m(r, c);
        const Int term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Int(-term);
    }
    return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of the k x k minors.
// Zeros mark the rank deficit, matching the Smith diagonal.
inline IntVector invariant_factors(const IntMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    IntVector out;
    Int prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        combinations(m.rows(), k, 0, cur, rs);
        combinations(m.cols(), k, 0, cur, cs);
        Int g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                g = gcd(g, abs(cofactor_det(sub)));
            }
        if (g == 0) {
            out.resize(n, 0);
            return out;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = e(rng);
    return m;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    IntVector v(n);
    for (auto& x : v) x = e(rng);
    return v;
}

struct DiagramFilter {
    std::size_t max_genus = 3;
    Int max_entry = 3;
    Int max_torsion = 1000;
    bool odd_torsion = false;
    bool rational_sphere = false;  // free rank 0
    Int min_torsion = 1;
    std::size_t min_torsion_rank = 0;
    std::size_t max_word = 8;
};

// Both systems are images of the meridians under short random words, then
// kept only if they satisfy the filter.
inline heegaard::HeegaardDiagramH1 random_diagram(std::mt19937_64& rng, const DiagramFilter& f) {
    std::uniform_int_distribution<std::size_t> gdist(1, f.max_genus);
    std::uniform_int_distribution<std::size_t> len(1, f.max_word);
    for (;;) {
        const std::size_t g = gdist(rng);
        const auto a = heegaard::random_symplectic_map(g, len(rng), rng());
        const auto b = heegaard::random_symplectic_map(g, len(rng), rng());
        const auto mer = heegaard::Lagrangian::meridians(g);
        heegaard::HeegaardDiagramH1 d(heegaard::apply_map(a, mer), heegaard::apply_map(b, mer));
        if (d.minus().rows().max_abs_entry() > f.max_entry || d.plus().rows().max_abs_entry() > f.max_entry)
            continue;
        const auto h = heegaard::first_homology(d);
        const Int t = h.torsion_order();
        if (t > f.max_torsion || t < f.min_torsion) continue;
        if (f.odd_torsion && t % 2 == 0) continue;
        if (f.rational_sphere && h.free_rank != 0) continue;
        if (h.invariant_factors.size() < f.min_torsion_rank) continue;
        return d;
    }
}

// A Q/Z-valued form given by orders and numerators over a common scale,
// with its own element arithmetic.
struct BruteForm {
    std::vector<std::int64_t> orders;
    std::vector<std::vector<std::int64_t>> num;  // value(e_i, e_j) = num / scale
    std::int64_t scale = 1;

    using Elem = std::vector<std::int64_t>;

    std::vector<Elem> elements() const {
        std::vector<Elem> out{Elem(orders.size(), 0)};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::vector<Elem> next;
            for (const auto& e : out)
                for (std::int64_t k = 0; k < orders[i]; ++k) {
                    Elem f = e;
                    f[i] = k;
                    next.push_back(f);
                }
            out = std::move(next);
        }
        return out;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
        return c;
    }

    std::int64_t pair(const Elem& a, const Elem& b) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) s = (s + a[i] * b[j] % scale * num[i][j]) % scale;
        return (s % scale + scale) % scale;
    }

    std::set<Elem> span(const std::vector<Elem>& gens) const {
        std::set<Elem> s{Elem(orders.size(), 0)};
        std::vector<Elem> frontier(s.begin(), s.end());
        while (!frontier.empty()) {
            std::vector<Elem> next;
            for (const auto& e : frontier)
                for (const auto& g : gens) {
                    Elem f = add(e, g);
                    if (s.insert(f).second) next.push_back(f);
                }
            frontier = std::move(next);
        }
        return s;
    }

    bool nonsingular() const {
        const auto all = elements();
        for (const auto& a : all) {
            if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
            bool seen = false;
            for (const auto& b : all)
                if (pair(a, b) != 0) {
                    seen = true;
                    break;
                }
            if (!seen) return false;
        }
        return true;
    }

    // All subgroups generated by at most orders.size() elements (every
    // subgroup of a group of that rank is), by brute force.
    std::vector<std::set<Elem>> subgroups() const {
        const auto all = elements();
        std::set<std::set<Elem>> found;
        std::vector<Elem> gens;
        std::function<void(std::size_t)> rec = [&](std::size_t depth) {
            found.insert(span(gens));
            if (depth == orders.size()) return;
            for (const auto& e : all) {
                gens.push_back(e);
                rec(depth + 1);
                gens.pop_back();
            }
        };
        rec(0);
        return {found.begin(), found.end()};
    }

    static BruteForm from_gram(const IntVector& orders, const std::vector<std::vector<heegaard::QmodZ>>& gram) {
        BruteForm f;
        for (const auto& n : orders) {
            f.orders.push_back(static_cast<std::int64_t>(n));
            f.scale = std::lcm(f.scale, f.orders.back());
        }
        for (const auto& row : gram) {
            std::vector<std::int64_t> r;
            for (const auto& x : row) r.push_back(static_cast<std::int64_t>(x.num() * (f.scale / x.den())));
            f.num.push_back(r);
        }
        return f;
    }

    bool hyperbolic() const {
        std::int64_t t = 1;
        for (auto n : orders) t *= n;
        const std::int64_t root = std::llround(std::sqrt(static_cast<double>(t)));
        if (root * root != t) return false;
        std::vector<std::set<Elem>> iso;
        for (const auto& s : subgroups()) {
            if (static_cast<std::int64_t>(s.size()) != root) continue;
            bool ok = true;
            for (const auto& a : s) {
                for (const auto& b : s)
                    if (pair(a, b) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) iso.push_back(s);
        }
        for (std::size_t i = 0; i < iso.size(); ++i)
            for (std::size_t j = i; j < iso.size(); ++j) {
                std::size_t common = 0;
                for (const auto& x : iso[i]) common += iso[j].count(x);
                if (common == 1) return true;
            }
        return false;
    }
};

// Coefficients (A, B, C) of the quadratic q(a, b) = det[v | F v], v = (a, b),
// recovered by interpolation from cofactor determinants at (1,0), (0,1), (1,1).
inline Int genus1_det(const IntMatrix& f, const Int& a, const Int& b) {
    IntMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 0) = b;
    m(0, 1) = f(0, 0) * a + f(0, 1) * b;
    m(1, 1) = f(1, 0) * a + f(1, 1) * b;
    return cofactor_det(m);
}

inline std::array<Int, 3> interpolate_genus1_form(const IntMatrix& f) {
    const Int a = genus1_det(f, 1, 0);
    const Int c = genus1_det(f, 0, 1);
    const Int b = genus1_det(f, 1, 1) - a - c;
    return {a, b, c};
}

}  // namespace oracle
