#include "heegaard/qsearch.hpp"

#include "heegaard/homology.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heegaard {

std::array<Int, 3> genus1_torsion_form(const SymplecticMap& f) {
    if (f.genus() != 1) throw std::invalid_argument("genus1_torsion_form: map must have genus 1");
    const IntMatrix& m = f.matrix();
    // det[[a, f11 a + f12 b], [b, f21 a + f22 b]]
    std::array<Int, 3> c{m(1, 0), m(1, 1) - m(0, 0), -m(0, 1)};
    for (const auto& x : c) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : c) y = -y;
        break;
    }
    return c;
}

Int genus1_torsion(const SymplecticMap& f, const Int& a, const Int& b) {
    if (f.genus() != 1) throw std::invalid_argument("genus1_torsion: map must have genus 1");
    const IntVector fv = f.apply({a, b});
    return abs(a * fv[1] - b * fv[0]);
}

Ub0Scan ub0_scan(const SymplecticMap& f, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("ub0_scan: bound must be positive");
    Ub0Scan out;
    for (std::int64_t a = 0; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
            if (a == 0 && b <= 0) continue;
            if (std::gcd(a, b) != 1) continue;
            ++out.examined;
            const Int t = genus1_torsion(f, a, b);
            if (t == 0)
                out.zeros.push_back({a, b, t});
            else if (is_perfect_square(t))
                out.squares.push_back({a, b, t});
        }
    return out;
}

namespace {

std::int64_t order_key(std::int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; }

std::int64_t omega64(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v, std::size_t g) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < g; ++i) s += u[i] * v[g + i] - u[g + i] * v[i];
    return s;
}

// Depth-first over Hermite-form rows; isotropy is checked as rows are added.
class HermiteEnumerator {
public:
    HermiteEnumerator(std::size_t g, std::int64_t n) : g_(g), n_(n), rows_(g, std::vector<std::int64_t>(2 * g)) {}

    std::vector<std::vector<std::vector<std::int64_t>>> run() {
        choose_pivots(0, 0);
        return std::move(found_);
    }

private:
    void choose_pivots(std::size_t row, std::size_t from) {
        if (row == g_) {
            fill_row(0);
            return;
        }
        for (std::size_t c = from; c + (g_ - row) <= 2 * g_; ++c) {
            pivots_.push_back(c);
            choose_pivots(row + 1, c + 1);
            pivots_.pop_back();
        }
    }

    // Rows are filled bottom-up so each row's bound above later pivots is known.
    void fill_row(std::size_t done) {
        if (done == g_) {
            found_.push_back(rows_);
            return;
        }
        const std::size_t r = g_ - 1 - done;
        auto& row = rows_[r];
        std::fill(row.begin(), row.end(), 0);
        std::vector<std::size_t> free;
        for (std::size_t c = pivots_[r] + 1; c < 2 * g_; ++c) free.push_back(c);
        for (std::int64_t p = 1; p <= n_; ++p) {
            row[pivots_[r]] = p;
            assign(r, free, 0, done);
        }
    }

    void assign(std::size_t r, const std::vector<std::size_t>& free, std::size_t k, std::size_t done) {
        auto& row = rows_[r];
        if (k == free.size()) {
            for (std::size_t s = r + 1; s < g_; ++s)
                if (omega64(row, rows_[s], g_) != 0) return;
            fill_row(done + 1);
            return;
        }
        const std::size_t c = free[k];
        std::int64_t lo = -n_, hi = n_;
        for (std::size_t s = r + 1; s < g_; ++s)
            if (pivots_[s] == c) {
                lo = 0;
                hi = std::min(n_, rows_[s][c] - 1);
            }
        for (std::int64_t v = lo; v <= hi; ++v) {
            row[c] = v;
            assign(r, free, k + 1, done);
        }
        row[c] = 0;
    }

    std::size_t g_;
    std::int64_t n_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::vector<std::vector<std::int64_t>>> found_;
};

}  // namespace

std::vector<Lagrangian> enumerate_lagrangians(std::size_t genus, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("enumerate_lagrangians: N must be positive");
    if (genus == 0) return {Lagrangian(0, IntMatrix(0, 0))};
    auto raw = HermiteEnumerator(genus, n).run();
    auto key = [](const std::vector<std::vector<std::int64_t>>& m) {
        std::vector<std::int64_t> k;
        for (const auto& row : m)
            for (auto v : row) k.push_back(order_key(v));
        return k;
    };
    std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> order;
    for (std::size_t i = 0; i < raw.size(); ++i) order.emplace_back(key(raw[i]), i);
    std::sort(order.begin(), order.end());

    std::vector<Lagrangian> out;
    for (const auto& [k, i] : order) {
        IntMatrix m(genus, 2 * genus);
        for (std::size_t r = 0; r < genus; ++r)
            for (std::size_t c = 0; c < 2 * genus; ++c) m(r, c) = raw[i][r][c];
        if (is_lagrangian(m, genus)) out.emplace_back(genus, std::move(m));
    }
    return out;
}

QCandidate q_candidate(const SymplecticMap& theta, const Lagrangian& l) {
    const AbelianGroup h = quotient_by_rows(vstack(l.rows(), apply_map(theta, l).rows()));
    return {h.free_rank, h.torsion_order()};
}

QSearchResult question_q_search(const SymplecticMap& theta, std::int64_t n, unsigned threads) {
    const auto stream = enumerate_lagrangians(theta.genus(), n);
    const std::size_t total = stream.size();
    threads = std::max(1u, threads);

    std::atomic<std::size_t> best{total};
    std::vector<Int> torsion(total);
    std::vector<char> has_rank(total, 0);
    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
            const QCandidate c = q_candidate(theta, stream[i]);
            torsion[i] = c.torsion;
            has_rank[i] = c.torsion_free_rank > 0;
            if (!is_perfect_square(c.torsion)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };
    const std::size_t chunk = (total + threads - 1) / threads;
    if (threads == 1 || total < 2) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            if (lo >= total) break;
            pool.emplace_back(worker, lo, std::min(total, lo + chunk));
        }
        for (auto& t : pool) t.join();
    }

    // Every index below `best` was evaluated: a range only stops early at
    // its own witness or once a smaller witness is known.
    QSearchResult r;
    r.bound = n;
    r.candidates = total;
    const std::size_t w = best.load();
    r.examined = w < total ? w + 1 : total;
    for (std::size_t i = 0; i < r.examined; ++i) r.zero_count += has_rank[i];
    if (w < total) {
        r.status = QSearchResult::Status::found;
        r.witness = stream[w];
        r.witness_torsion = torsion[w];
    }
    return r;
}

SymplecticMap named_map(const std::string& name, std::size_t genus) {
    if (genus == 0) throw std::invalid_argument("named_map: genus must be positive");
    if (name == "identity") return SymplecticMap::identity(genus);
    SymplecticMap base = SymplecticMap::identity(1);
    if (name == "rotation")
        base = SymplecticMap::rotation();
    else if (name == "shear")
        base = SymplecticMap::shear();
    else if (name == "ub0")
        base = SymplecticMap(1, IntMatrix{{-2, -3}, {3, 4}});
    else
        throw std::invalid_argument("unknown map '" + name + "' (expected rotation, shear, identity or ub0)");
    return genus == 1 ? base : hat_stabilize_map(base, 0, genus - 1);
}

}  // namespace heegaard
