#include "heegaard/finite_form.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace heegaard {

QmodZ::QmodZ(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("QmodZ: zero denominator");
    Int n = den < 0 ? Int(-num) : num;
    Int d = abs(den);
    n %= d;
    if (n < 0) n += d;
    const Int g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    return QmodZ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::string QmodZ::to_string() const { return num_.str() + "/" + den_.str(); }

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t to_i64(const Int& x, const char* what) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::length_error(std::string(what) + ": value exceeds 64 bits");
    return static_cast<std::int64_t>(x);
}

}  // namespace

FiniteForm::FiniteForm(std::vector<std::int64_t> orders, std::vector<std::vector<std::int64_t>> gram,
                       std::int64_t scale)
    : orders_(std::move(orders)), gram_(std::move(gram)), scale_(scale) {
    if (scale_ <= 0) throw std::invalid_argument("FiniteForm: scale must be positive");
    if (gram_.size() != orders_.size()) throw std::invalid_argument("FiniteForm: gram size mismatch");
    size_ = 1;
    for (auto n : orders_) {
        if (n <= 0) throw std::invalid_argument("FiniteForm: orders must be positive");
        if (size_ > std::numeric_limits<std::int64_t>::max() / n)
            throw std::length_error("FiniteForm: group order overflows");
        size_ *= n;
    }
    const std::size_t r = orders_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (gram_[i].size() != r) throw std::invalid_argument("FiniteForm: gram is not square");
        for (auto& x : gram_[i]) x = ((x % scale_) + scale_) % scale_;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("FiniteForm: gram is not symmetric");
            if (mulmod(gram_[i][j], orders_[i], scale_) != 0)
                throw std::invalid_argument("FiniteForm: value not defined on the cyclic factor");
        }
}

FiniteForm FiniteForm::from_rational(const IntVector& orders, const std::vector<std::vector<QmodZ>>& gram,
                                     std::int64_t max_order) {
    Int total = 1;
    for (const auto& n : orders) total *= n;
    if (total > max_order) throw std::length_error("FiniteForm: group order exceeds bound");
    std::vector<std::int64_t> ord;
    std::int64_t scale = 1;
    for (const auto& n : orders) {
        ord.push_back(to_i64(n, "FiniteForm"));
        scale = std::lcm(scale, ord.back());
    }
    std::vector<std::vector<std::int64_t>> g(ord.size(), std::vector<std::int64_t>(ord.size()));
    for (std::size_t i = 0; i < ord.size(); ++i)
        for (std::size_t j = 0; j < ord.size(); ++j) {
            const QmodZ& q = gram[i][j];
            if (Int(scale) % q.den() != 0)
                throw std::invalid_argument("FiniteForm: denominator does not divide the exponent");
            g[i][j] = to_i64(q.num() * (Int(scale) / q.den()), "FiniteForm");
        }
    return FiniteForm(std::move(ord), std::move(g), scale);
}

FiniteForm::Element FiniteForm::element(std::int64_t index) const {
    Element e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e[i] = index % orders_[i];
        index /= orders_[i];
    }
    return e;
}

std::int64_t FiniteForm::index(const Element& e) const {
    std::int64_t idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) idx = idx * orders_[i] + e[i];
    return idx;
}

FiniteForm::Element FiniteForm::add(const Element& a, const Element& b) const {
    Element c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = a[i] + b[i];
        if (c[i] >= orders_[i]) c[i] -= orders_[i];
    }
    return c;
}

FiniteForm::Element FiniteForm::multiply(const Element& a, std::int64_t k) const {
    Element c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        c[i] = mulmod(a[i], ((k % orders_[i]) + orders_[i]) % orders_[i], orders_[i]);
    }
    return c;
}

std::int64_t FiniteForm::order(const Element& e) const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], e[i]));
    return o;
}

std::int64_t FiniteForm::pair(const Element& a, const Element& b) const {
    __int128 acc = 0;
    const std::size_t r = orders_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0 || gram_[i][j] == 0) continue;
            acc += static_cast<__int128>(mulmod(a[i], gram_[i][j], scale_)) * b[j] % scale_;
        }
        acc %= scale_;
    }
    return static_cast<std::int64_t>(acc % scale_);
}

QmodZ FiniteForm::value(const Element& a, const Element& b) const { return QmodZ(pair(a, b), scale_); }

bool FiniteForm::is_nonsingular() const {
    const std::size_t r = orders_.size();
    for (std::int64_t idx = 1; idx < size_; ++idx) {
        const Element x = element(idx);
        bool detected = false;
        for (std::size_t j = 0; j < r && !detected; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < r; ++i) s = (s + mulmod(x[i], gram_[i][j], scale_)) % scale_;
            detected = s != 0;
        }
        if (!detected) return false;
    }
    return true;
}

FiniteForm FiniteForm::negated() const {
    auto g = gram_;
    for (auto& row : g)
        for (auto& x : row) x = (scale_ - x) % scale_;
    return FiniteForm(orders_, std::move(g), scale_);
}

FiniteForm::Element FiniteForm::PrimaryPart::lift(const Element& e, const FiniteForm& parent) const {
    Element out(parent.rank(), 0);
    for (std::size_t k = 0; k < source.size(); ++k) {
        const std::int64_t n = parent.orders()[source[k]];
        out[source[k]] = mulmod(e[k], multiplier[k], n);
    }
    return out;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

std::vector<FiniteForm::PrimaryPart> FiniteForm::primary_parts() const {
    std::map<std::int64_t, PrimaryPart> parts;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        for (auto p : prime_factors(orders_[i])) {
            std::int64_t pv = 1, rest = orders_[i];
            while (rest % p == 0) {
                rest /= p;
                pv *= p;
            }
            auto& part = parts[p];
            part.prime = p;
            part.source.push_back(i);
            part.multiplier.push_back(rest);
            part.part_orders.push_back(pv);
        }
    }
    std::vector<PrimaryPart> out;
    for (auto& [p, part] : parts) out.push_back(std::move(part));
    return out;
}

FiniteForm FiniteForm::restrict_to(const PrimaryPart& part) const {
    const std::size_t r = part.source.size();
    std::int64_t sub_scale = 1;
    for (auto o : part.part_orders) sub_scale = std::max(sub_scale, o);
    std::vector<std::vector<std::int64_t>> g(r, std::vector<std::int64_t>(r));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
            Int v = Int(part.multiplier[k]) * part.multiplier[l] * gram_[part.source[k]][part.source[l]];
            v %= scale_;
            v *= sub_scale;
            if (v % scale_ != 0) throw std::logic_error("restrict_to: value escapes the primary part");
            g[k][l] = static_cast<std::int64_t>(v / scale_);
        }
    return FiniteForm(part.part_orders, std::move(g), sub_scale);
}

bool isomorphic(const FiniteForm& a, const FiniteForm& b) {
    if (a.size() != b.size()) return false;
    if (!b.is_nonsingular()) throw std::invalid_argument("isomorphic: second form is singular");
    if (!a.is_nonsingular()) return false;

    std::vector<FiniteForm::Element> elems;
    std::map<std::int64_t, std::int64_t> hist_a, hist_b;
    for (std::int64_t i = 0; i < a.size(); ++i) {
        elems.push_back(a.element(i));
        ++hist_a[a.order(elems.back())];
        ++hist_b[b.order(b.element(i))];
    }
    if (hist_a != hist_b) return false;

    const std::int64_t l = std::lcm(a.scale(), b.scale());
    const std::int64_t ca = l / a.scale();
    const std::int64_t cb = l / b.scale();
    const std::size_t r = b.rank();

    std::vector<std::vector<std::size_t>> candidates(r);
    for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t want = mulmod(b.gram(j, j), cb, l);
        for (std::size_t x = 0; x < elems.size(); ++x)
            if (b.orders()[j] % a.order(elems[x]) == 0 && mulmod(a.pair(elems[x], elems[x]), ca, l) == want)
                candidates[j].push_back(x);
    }

    std::vector<std::size_t> image(r);
    auto search = [&](auto&& self, std::size_t j) -> bool {
        if (j == r) return true;
        for (std::size_t x : candidates[j]) {
            bool ok = true;
            for (std::size_t k = 0; k < j && ok; ++k)
                ok = mulmod(a.pair(elems[image[k]], elems[x]), ca, l) == mulmod(b.gram(k, j), cb, l);
            if (!ok) continue;
            image[j] = x;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    return search(search, 0);
}

namespace {

// Depth-first enumeration of isotropic subgroups of a form. Each subgroup is
// reached exactly once, via its greedy generating sequence: every new
// generator is the least element of the final subgroup outside the span of
// the previous ones.
class IsotropicSearch {
public:
    explicit IsotropicSearch(const FiniteForm& form) : form_(form), n_(form.size()) {
        elems_.reserve(static_cast<std::size_t>(n_));
        self_.reserve(static_cast<std::size_t>(n_));
        for (std::int64_t i = 0; i < n_; ++i) {
            elems_.push_back(form.element(i));
            self_.push_back(form.pair(elems_.back(), elems_.back()));
        }
    }

    // Calls on_found(generators) for each isotropic subgroup of order
    // `target` meeting `avoid` only in 0; stops when it returns true.
    template <class OnFound>
    bool run(std::int64_t target, const std::vector<char>* avoid, OnFound&& on_found) {
        target_ = target;
        avoid_ = avoid;
        in_.assign(static_cast<std::size_t>(n_), 0);
        in_[0] = 1;
        members_.assign(1, 0);
        gens_.clear();
        return dfs(0, on_found);
    }

    std::vector<char> closure(const std::vector<std::int64_t>& gens) const {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        std::vector<std::int64_t> members{0};
        in[0] = 1;
        for (auto g : gens) {
            const std::size_t base = members.size();
            auto m = elems_[static_cast<std::size_t>(g)];
            while (!in[static_cast<std::size_t>(form_.index(m))]) {
                for (std::size_t s = 0; s < base; ++s) {
                    auto e = form_.index(form_.add(elems_[static_cast<std::size_t>(members[s])], m));
                    in[static_cast<std::size_t>(e)] = 1;
                    members.push_back(e);
                }
                m = form_.add(m, elems_[static_cast<std::size_t>(g)]);
            }
        }
        return in;
    }

    const FiniteForm::Element& element(std::int64_t i) const { return elems_[static_cast<std::size_t>(i)]; }

private:
    template <class OnFound>
    bool dfs(std::int64_t last, OnFound& on_found) {
        if (static_cast<std::int64_t>(members_.size()) == target_) return on_found(gens_);
        for (std::int64_t x = last + 1; x < n_; ++x) {
            const auto ux = static_cast<std::size_t>(x);
            if (in_[ux] || self_[ux] != 0 || (avoid_ && (*avoid_)[ux])) continue;
            bool orthogonal = true;
            for (auto g : gens_)
                if (form_.pair(elems_[ux], elems_[static_cast<std::size_t>(g)]) != 0) {
                    orthogonal = false;
                    break;
                }
            if (!orthogonal) continue;

            std::vector<std::int64_t> added;
            bool ok = true;
            auto m = elems_[ux];
            while (ok && !in_[static_cast<std::size_t>(form_.index(m))]) {
                for (auto s : members_) {
                    auto e = form_.index(form_.add(elems_[static_cast<std::size_t>(s)], m));
                    if (e < x || (avoid_ && (*avoid_)[static_cast<std::size_t>(e)])) {
                        ok = false;
                        break;
                    }
                    added.push_back(e);
                }
                if (static_cast<std::int64_t>(members_.size() + added.size()) > target_) ok = false;
                m = form_.add(m, elems_[ux]);
            }
            if (!ok) continue;

            for (auto e : added) in_[static_cast<std::size_t>(e)] = 1;
            const std::size_t keep = members_.size();
            members_.insert(members_.end(), added.begin(), added.end());
            gens_.push_back(x);
            const bool stop = dfs(x, on_found);
            gens_.pop_back();
            members_.resize(keep);
            for (auto e : added) in_[static_cast<std::size_t>(e)] = 0;
            if (stop) return true;
        }
        return false;
    }

    const FiniteForm& form_;
    std::int64_t n_;
    std::vector<FiniteForm::Element> elems_;
    std::vector<std::int64_t> self_;
    std::int64_t target_ = 1;
    const std::vector<char>* avoid_ = nullptr;
    std::vector<char> in_;
    std::vector<std::int64_t> members_;
    std::vector<std::int64_t> gens_;
};

std::int64_t exact_sqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct PrimarySplit {
    std::vector<std::int64_t> a, b;  // element indices in the primary form
};

std::optional<PrimarySplit> split_primary(const FiniteForm& part, unsigned threads) {
    const std::int64_t root = exact_sqrt(part.size());
    if (root * root != part.size()) return std::nullopt;

    IsotropicSearch search(part);
    std::vector<std::vector<std::int64_t>> lagrangians;
    search.run(root, nullptr, [&](const std::vector<std::int64_t>& gens) {
        lagrangians.push_back(gens);
        return false;
    });
    if (lagrangians.empty()) return std::nullopt;

    // Candidates are scanned in enumeration order; the least index with a
    // complement wins no matter how work is interleaved.
    const std::size_t count = lagrangians.size();
    std::vector<std::optional<std::vector<std::int64_t>>> complements(count);
    std::atomic<std::size_t> best{count};
    auto worker = [&](std::size_t start, std::size_t stride) {
        IsotropicSearch local(part);
        for (std::size_t i = start; i < count; i += stride) {
            if (i > best.load()) break;
            const std::vector<char> avoid = local.closure(lagrangians[i]);
            local.run(root, &avoid, [&](const std::vector<std::int64_t>& gens) {
                complements[i] = gens;
                return true;
            });
            if (complements[i]) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (n == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker, t, n);
        for (auto& th : pool) th.join();
    }
    const std::size_t winner = best.load();
    if (winner == count) return std::nullopt;
    return PrimarySplit{lagrangians[winner], *complements[winner]};
}

}  // namespace

std::optional<FormSplit> find_hyperbolic_split(const FiniteForm& form, unsigned threads) {
    FormSplit split;
    for (const auto& part : form.primary_parts()) {
        const FiniteForm sub = form.restrict_to(part);
        auto found = split_primary(sub, threads);
        if (!found) return std::nullopt;
        for (auto i : found->a) split.a.push_back(part.lift(sub.element(i), form));
        for (auto i : found->b) split.b.push_back(part.lift(sub.element(i), form));
    }
    return split;
}

namespace {

std::vector<char> subgroup_members(const FiniteForm& form, const std::vector<FiniteForm::Element>& gens) {
    std::vector<char> in(static_cast<std::size_t>(form.size()), 0);
    std::vector<std::int64_t> members{0};
    in[0] = 1;
    for (const auto& g : gens) {
        const std::size_t base = members.size();
        auto m = g;
        while (!in[static_cast<std::size_t>(form.index(m))]) {
            for (std::size_t s = 0; s < base; ++s) {
                auto e = form.index(form.add(form.element(members[s]), m));
                in[static_cast<std::size_t>(e)] = 1;
                members.push_back(e);
            }
            m = form.add(m, g);
        }
    }
    return in;
}

}  // namespace

bool verify_split(const FiniteForm& form, const FormSplit& split) {
    for (const auto* gens : {&split.a, &split.b})
        for (const auto& u : *gens)
            for (const auto& v : *gens)
                if (form.pair(u, v) != 0) return false;
    const auto in_a = subgroup_members(form, split.a);
    const auto in_b = subgroup_members(form, split.b);
    std::int64_t size_a = 0, size_b = 0;
    for (std::size_t i = 0; i < in_a.size(); ++i) {
        size_a += in_a[i];
        size_b += in_b[i];
        if (i > 0 && in_a[i] && in_b[i]) return false;
    }
    return size_a * size_b == form.size();
}

std::optional<std::vector<CyclicPiece>> greedy_cyclic_pieces(const FiniteForm& primary) {
    std::vector<std::int64_t> current(static_cast<std::size_t>(primary.size()));
    std::iota(current.begin(), current.end(), 0);
    std::vector<FiniteForm::Element> elems;
    for (std::int64_t i = 0; i < primary.size(); ++i) elems.push_back(primary.element(i));

    std::vector<CyclicPiece> pieces;
    while (current.size() > 1) {
        std::int64_t exponent = 1;
        for (auto i : current) exponent = std::max(exponent, primary.order(elems[static_cast<std::size_t>(i)]));
        std::optional<std::int64_t> pick;
        for (auto i : current) {
            const auto& e = elems[static_cast<std::size_t>(i)];
            if (primary.order(e) != exponent) continue;
            const std::int64_t v = primary.pair(e, e);
            if (primary.scale() / std::gcd(v, primary.scale()) == exponent) {
                pick = i;
                break;
            }
        }
        if (!pick) return std::nullopt;
        const auto& f = elems[static_cast<std::size_t>(*pick)];
        pieces.push_back({exponent, primary.value(f, f), f});
        std::vector<std::int64_t> rest;
        for (auto i : current)
            if (primary.pair(elems[static_cast<std::size_t>(i)], f) == 0) rest.push_back(i);
        current = std::move(rest);
    }
    return pieces;
}

std::vector<CyclicPiece> merge_coprime_pieces(const FiniteForm& parent,
                                              std::vector<std::vector<CyclicPiece>> per_prime) {
    std::size_t longest = 0;
    for (auto& list : per_prime) {
        std::sort(list.begin(), list.end(),
                  [](const CyclicPiece& a, const CyclicPiece& b) { return a.order > b.order; });
        longest = std::max(longest, list.size());
    }
    std::vector<CyclicPiece> merged;
    for (std::size_t k = 0; k < longest; ++k) {
        CyclicPiece piece{1, QmodZ(), FiniteForm::Element(parent.rank(), 0)};
        for (const auto& list : per_prime) {
            if (k >= list.size()) continue;
            piece.order *= list[k].order;
            piece.value = piece.value + list[k].value;
            piece.generator = parent.add(piece.generator, list[k].generator);
        }
        merged.push_back(std::move(piece));
    }
    std::reverse(merged.begin(), merged.end());
    return merged;
}

std::optional<std::vector<CyclicPiece>> orthogonal_cyclic_pieces(const FiniteForm& form) {
    std::vector<std::vector<CyclicPiece>> per_prime;
    for (const auto& part : form.primary_parts()) {
        const FiniteForm sub = form.restrict_to(part);
        auto pieces = greedy_cyclic_pieces(sub);
        if (!pieces) return std::nullopt;
        for (auto& p : *pieces) p.generator = part.lift(p.generator, form);
        per_prime.push_back(std::move(*pieces));
    }
    return merge_coprime_pieces(form, std::move(per_prime));
}

}  // namespace heegaard
