#include "heegaard/linkform.hpp"

#include <map>

namespace heegaard {

namespace {

// Z^{2g} / (span minus + span plus) via Smith form of the stacked rows.
SmithDecomposition relation_smith(const HeegaardDiagramH1& d) {
    return snf(vstack(d.minus().rows(), d.plus().rows()));
}

Int lcm_of(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

// Solves order * rep = x + y with x in span(minus), y in span(plus); returns y.
std::optional<IntVector> plus_component(const HeegaardDiagramH1& d, const IntVector& rep, const Int& order) {
    const std::size_t g = d.genus();
    const IntMatrix system = hstack(d.minus().rows().transpose(), d.plus().rows().transpose());
    IntVector target(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) target[i] = order * rep[i];
    auto coeffs = solve_integer(system, target);
    if (!coeffs) return std::nullopt;
    IntVector y(2 * g);
    for (std::size_t j = 0; j < g; ++j) {
        const IntVector row = d.plus().row(j);
        for (std::size_t k = 0; k < 2 * g; ++k) y[k] += (*coeffs)[g + j] * row[k];
    }
    return y;
}

}  // namespace

std::vector<TorsionClass> torsion_generators(const HeegaardDiagramH1& d) {
    std::vector<TorsionClass> gens;
    if (d.genus() == 0) return gens;
    const SmithDecomposition sd = relation_smith(d);
    const IntVector diag = sd.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] >= 2) gens.push_back({sd.v_inv.row(i), diag[i]});
    return gens;
}

std::optional<TorsionClass> torsion_class(const HeegaardDiagramH1& d, const IntVector& representative) {
    if (representative.size() != 2 * d.genus())
        throw std::invalid_argument("torsion_class: representative must have length 2g");
    if (d.genus() == 0) return TorsionClass{representative, 1};
    const SmithDecomposition sd = relation_smith(d);
    const IntVector coords = sd.v.transpose().apply(representative);
    Int order = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Int di = sd.d(i, i);
        if (di == 0) {
            if (coords[i] != 0) return std::nullopt;
            continue;
        }
        Int r = coords[i] % di;
        if (r < 0) r += di;
        order = lcm_of(order, di / gcd(di, r));
    }
    return TorsionClass{representative, order};
}

QmodZ linking_number(const HeegaardDiagramH1& d, const TorsionClass& a, const TorsionClass& b) {
    const std::size_t g = d.genus();
    if (a.representative.size() != 2 * g || b.representative.size() != 2 * g)
        throw std::invalid_argument("linking_number: representatives must have length 2g");
    if (a.order <= 0 || b.order <= 0) throw std::invalid_argument("linking_number: orders must be positive");
    auto y = plus_component(d, a.representative, a.order);
    if (!y) throw std::invalid_argument("linking_number: first class is not torsion of the stated order");
    if (!plus_component(d, b.representative, b.order))
        throw std::invalid_argument("linking_number: second class is not torsion of the stated order");
    return QmodZ(omega(*y, b.representative, g), a.order);
}

Int LinkingForm::order() const {
    Int t = 1;
    for (const auto& n : invariant_factors) t *= n;
    return t;
}

bool LinkingForm::is_symmetric() const {
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(gram[i][j] == gram[j][i])) return false;
    return true;
}

LinkingForm LinkingForm::negated() const {
    LinkingForm out = *this;
    for (auto& row : out.gram)
        for (auto& x : row) x = -x;
    return out;
}

FiniteForm LinkingForm::to_finite(std::int64_t max_order) const {
    return FiniteForm::from_rational(invariant_factors, gram, max_order);
}

LinkingForm linking_form(const HeegaardDiagramH1& d) {
    const auto gens = torsion_generators(d);
    LinkingForm lf;
    for (const auto& g : gens) lf.invariant_factors.push_back(g.order);
    lf.gram.assign(gens.size(), std::vector<QmodZ>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) lf.gram[i][j] = linking_number(d, gens[i], gens[j]);
    return lf;
}

LinkingForm DiagonalPresentation::as_form() const {
    LinkingForm lf;
    const std::size_t n = pairs.size() + residual_orders.size();
    lf.gram.assign(n, std::vector<QmodZ>(n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        lf.invariant_factors.push_back(pairs[i].first);
        lf.gram[i][i] = QmodZ(pairs[i].second, pairs[i].first);
    }
    for (std::size_t i = 0; i < residual_orders.size(); ++i) {
        lf.invariant_factors.push_back(residual_orders[i]);
        for (std::size_t j = 0; j < residual_orders.size(); ++j)
            lf.gram[pairs.size() + i][pairs.size() + j] = residual_gram[i][j];
    }
    return lf;
}

DiagonalPresentation diagonalize(const HeegaardDiagramH1& d) {
    DiagonalPresentation out;
    const std::size_t g = d.genus();
    if (g == 0) return out;

    // Symplectic basis (m_i, dual_i) with m_i the rows of L_minus.
    const IntMatrix pairing = d.minus().rows() * symplectic_gram(g);
    std::vector<IntVector> duals;
    for (std::size_t j = 0; j < g; ++j) {
        IntVector e(g);
        e[j] = 1;
        auto sol = solve_integer(pairing, e);
        if (!sol) throw std::logic_error("diagonalize: L_minus has no integral dual basis");
        IntVector dj = std::move(*sol);
        const IntVector original = dj;
        for (std::size_t i = 0; i < j; ++i) {
            const Int c = omega(duals[i], original, g);
            const IntVector mi = d.minus().row(i);
            for (std::size_t k = 0; k < 2 * g; ++k) dj[k] += c * mi[k];
        }
        duals.push_back(std::move(dj));
    }

    // Coordinates of L_plus: x-block against the duals, p-block against L_minus.
    IntMatrix a(g, g), b(g, g);
    for (std::size_t j = 0; j < g; ++j) {
        const IntVector pj = d.plus().row(j);
        for (std::size_t i = 0; i < g; ++i) {
            a(j, i) = omega(pj, duals[i], g);
            b(j, i) = omega(d.minus().row(i), pj, g);
        }
    }

    // Handle slides act on rows (U); a basis change W of span(L_minus)
    // sends the p-block to B W and the x-block to A W^{-T}.
    const SmithDecomposition sd = snf(b);
    const IntMatrix a_prime = sd.u * a * sd.v_inv.transpose();
    out.boundary_diagonal = sd.diagonal();

    std::vector<std::size_t> torsion;
    for (std::size_t i = 0; i < g; ++i)
        if (out.boundary_diagonal[i] >= 2) torsion.push_back(i);
    const std::size_t r = torsion.size();

    std::vector<std::vector<QmodZ>> gram(r, std::vector<QmodZ>(r));
    IntVector orders;
    bool diagonal = true;
    for (std::size_t s = 0; s < r; ++s) {
        orders.push_back(out.boundary_diagonal[torsion[s]]);
        for (std::size_t t = 0; t < r; ++t) {
            gram[s][t] = QmodZ(a_prime(torsion[s], torsion[t]), out.boundary_diagonal[torsion[s]]);
            if (s != t && !gram[s][t].is_zero()) diagonal = false;
        }
    }
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < s; ++t)
            if (!(gram[s][t] == gram[t][s])) throw std::logic_error("diagonalize: presentation is not symmetric");

    if (diagonal) {
        for (std::size_t s = 0; s < r; ++s) {
            const Int& p = orders[s];
            Int q = a_prime(torsion[s], torsion[s]) % p;
            if (q < 0) q += p;
            out.pairs.emplace_back(p, q);
        }
        return out;
    }

    out.congruence_moves = true;
    Int total = 1;
    for (const auto& p : orders) total *= p;
    if (total > kDiagonalizeEnumerationLimit) {
        out.residual_orders = orders;
        out.residual_gram = gram;
        return out;
    }

    const FiniteForm form = FiniteForm::from_rational(orders, gram, kDiagonalizeEnumerationLimit);
    std::vector<std::vector<CyclicPiece>> per_prime;
    for (const auto& part : form.primary_parts()) {
        const FiniteForm sub = form.restrict_to(part);
        auto pieces = greedy_cyclic_pieces(sub);
        if (!pieces) {
            if (part.prime != 2) throw std::logic_error("diagonalize: odd primary part did not split");
            for (auto o : part.part_orders) out.residual_orders.emplace_back(o);
            out.residual_gram.assign(sub.rank(), std::vector<QmodZ>(sub.rank()));
            for (std::size_t k = 0; k < sub.rank(); ++k)
                for (std::size_t l = 0; l < sub.rank(); ++l)
                    out.residual_gram[k][l] = QmodZ(sub.gram(k, l), sub.scale());
            continue;
        }
        for (auto& p : *pieces) p.generator = part.lift(p.generator, form);
        per_prime.push_back(std::move(*pieces));
    }
    for (const auto& piece : merge_coprime_pieces(form, std::move(per_prime))) {
        const Int p = piece.order;
        out.pairs.emplace_back(p, (piece.value.num() * (p / piece.value.den())) % p);
    }
    return out;
}

std::optional<HyperbolicSplit> is_hyperbolic(const LinkingForm& lf, std::int64_t bound, unsigned threads) {
    const Int t = lf.order();
    if (t > bound)
        throw BoundExceeded("is_hyperbolic: torsion order " + t.str() + " exceeds bound " + std::to_string(bound));
    if (!is_perfect_square(t)) return std::nullopt;
    const FiniteForm form = lf.to_finite(bound);
    auto split = find_hyperbolic_split(form, threads);
    if (!split) return std::nullopt;
    auto convert = [](const std::vector<FiniteForm::Element>& elems) {
        std::vector<IntVector> out;
        for (const auto& e : elems) out.emplace_back(e.begin(), e.end());
        return out;
    };
    return HyperbolicSplit{convert(split->a), convert(split->b)};
}

bool pairs_off_hyperbolically(const DiagonalPresentation& presentation) {
    if (!presentation.fully_diagonal()) return false;
    std::map<std::pair<Int, Int>, long> pending;
    for (const auto& [p, q] : presentation.pairs) {
        if (p == 1) continue;
        if (p % 2 == 0) return false;
        Int partner = (p - q) % p;
        auto it = pending.find({p, partner});
        if (it != pending.end()) {
            if (--it->second == 0) pending.erase(it);
        } else {
            ++pending[{p, q}];
        }
    }
    return pending.empty();
}

std::vector<TorsionClass> realize(const HeegaardDiagramH1& d, const std::vector<TorsionClass>& generators,
                                  const std::vector<IntVector>& coordinates) {
    std::vector<TorsionClass> out;
    for (const auto& c : coordinates) {
        if (c.size() != generators.size()) throw std::invalid_argument("realize: coordinate length mismatch");
        IntVector rep(2 * d.genus());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = 0; k < rep.size(); ++k) rep[k] += c[i] * generators[i].representative[k];
        auto cls = torsion_class(d, rep);
        if (!cls) throw std::logic_error("realize: combination of torsion generators is not torsion");
        out.push_back(std::move(*cls));
    }
    return out;
}

HduVerdict hdu_verdict(const HeegaardDiagramH1& d, std::int64_t bound, unsigned threads) {
    HduVerdict v;
    v.homology = first_homology(d);
    const Int t = v.homology.torsion_order();
    v.integral_homology_sphere = v.homology.is_trivial();
    v.z2_homology_sphere = v.homology.free_rank == 0 && t % 2 == 1;
    v.split = is_hyperbolic(linking_form(d), bound, threads);
    v.hyperbolic = v.split.has_value();
    if (!v.hyperbolic)
        v.hdu = HduStatus::absent;
    else
        v.hdu = v.z2_homology_sphere ? HduStatus::exists : HduStatus::undetermined;
    return v;
}

const char* to_string(HduStatus s) {
    switch (s) {
        case HduStatus::exists: return "exists";
        case HduStatus::absent: return "absent";
        case HduStatus::undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace heegaard
