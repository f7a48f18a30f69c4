#include "heegaard/finite_form.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace heegaard;

namespace {

FiniteForm diag(std::vector<std::int64_t> orders, std::vector<std::int64_t> nums, std::int64_t scale) {
    std::vector<std::vector<std::int64_t>> g(orders.size(), std::vector<std::int64_t>(orders.size(), 0));
    for (std::size_t i = 0; i < orders.size(); ++i) g[i][i] = nums[i];
    return FiniteForm(std::move(orders), std::move(g), scale);
}

oracle::BruteForm brute(const FiniteForm& f) {
    oracle::BruteForm b;
    b.orders = f.orders();
    b.scale = f.scale();
    b.num.assign(f.rank(), std::vector<std::int64_t>(f.rank()));
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (std::size_t j = 0; j < f.rank(); ++j) b.num[i][j] = f.gram(i, j);
    return b;
}

// Random nonsingular forms on small groups, from random symmetric integer
// matrices: lambda(e_i, e_j) = a_ij / n with all orders n.
std::optional<FiniteForm> random_form(std::mt19937_64& rng) {
    const std::vector<std::vector<std::int64_t>> shapes{{3}, {5}, {9}, {2, 2}, {3, 3}, {4, 4}, {3, 9}, {5, 5},
                                                        {2, 4}, {2, 2, 2}, {3, 3, 3}, {6, 6}, {2, 6}, {7, 7}};
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    const auto orders = shapes[pick(rng)];
    const std::size_t r = orders.size();
    std::int64_t scale = 1;
    for (auto n : orders) scale = std::lcm(scale, n);
    std::vector<std::vector<std::int64_t>> g(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            // Value must be killed by both orders: a multiple of scale / gcd.
            const std::int64_t step = scale / std::gcd(orders[i], orders[j]);
            std::uniform_int_distribution<std::int64_t> k(0, std::gcd(orders[i], orders[j]) - 1);
            g[i][j] = g[j][i] = k(rng) * step;
        }
    FiniteForm f(orders, g, scale);
    if (!f.is_nonsingular()) return std::nullopt;
    return f;
}

bool same_subgroup(const FiniteForm& f, const std::vector<FiniteForm::Element>& a,
                   const std::vector<FiniteForm::Element>& b) {
    const auto bf = brute(f);
    return bf.span(a) == bf.span(b);
}

}  // namespace

TEST_CASE("QmodZ") {
    CHECK(QmodZ(4, 3) == QmodZ(1, 3));
    CHECK(QmodZ(-1, 3) == QmodZ(2, 3));
    CHECK(QmodZ(2, -4) == QmodZ(1, 2));
    CHECK(QmodZ(3, 3).is_zero());
    CHECK((QmodZ(1, 2) + QmodZ(1, 2)).is_zero());
    CHECK((QmodZ(1, 3) - QmodZ(1, 2)).to_string() == "5/6");
    CHECK((Int(3) * QmodZ(1, 6)).to_string() == "1/2");
    CHECK(QmodZ().to_string() == "0/1");
    CHECK_THROWS(QmodZ(1, 0));
}

TEST_CASE("form construction is validated") {
    CHECK_THROWS(FiniteForm({2, 2}, {{1, 1}, {0, 1}}, 2));
    CHECK_THROWS(FiniteForm({2}, {{1}}, 3));
    CHECK_THROWS(FiniteForm::from_rational({101, 101}, {{QmodZ(1, 101), QmodZ()}, {QmodZ(), QmodZ(1, 101)}}, 10000));
    const FiniteForm f = diag({2, 3}, {3, 2}, 6);
    CHECK(f.size() == 6);
    CHECK(f.value({1, 0}, {1, 0}) == QmodZ(1, 2));
    CHECK(f.value({1, 1}, {1, 1}) == QmodZ(1, 2) + QmodZ(1, 3));
    for (std::int64_t i = 0; i < f.size(); ++i) CHECK(f.index(f.element(i)) == i);
    CHECK(f.order({1, 1}) == 6);
    CHECK(f.order({0, 0}) == 1);
}

TEST_CASE("nonsingularity against brute force") {
    CHECK(diag({3}, {1}, 3).is_nonsingular());
    CHECK_FALSE(diag({3}, {0}, 3).is_nonsingular());
    CHECK_FALSE(diag({9}, {3}, 9).is_nonsingular());
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto orders = std::vector<std::int64_t>{3, 9};
        std::vector<std::vector<std::int64_t>> g{{0, 0}, {0, 0}};
        std::uniform_int_distribution<std::int64_t> k(0, 8);
        g[0][0] = 3 * (k(rng) % 3);
        g[0][1] = g[1][0] = 3 * (k(rng) % 3);
        g[1][1] = k(rng);
        const FiniteForm f(orders, g, 9);
        CHECK(f.is_nonsingular() == brute(f).nonsingular());
    }
}

TEST_CASE("hyperbolic splits of fixtures") {
    CHECK_FALSE(find_hyperbolic_split(diag({2, 2}, {1, 1}, 2)).has_value());
    const FiniteForm b({2, 2}, {{0, 1}, {1, 0}}, 2);
    const auto sb = find_hyperbolic_split(b);
    REQUIRE(sb.has_value());
    CHECK(sb->a == std::vector<FiniteForm::Element>{{1, 0}});
    CHECK(sb->b == std::vector<FiniteForm::Element>{{0, 1}});
    CHECK(verify_split(b, *sb));

    const FiniteForm z3 = diag({3, 3}, {1, 2}, 3);
    const auto s3 = find_hyperbolic_split(z3);
    REQUIRE(s3.has_value());
    CHECK(same_subgroup(z3, s3->a, {{1, 1}}));
    CHECK(same_subgroup(z3, s3->b, {{1, 2}}));

    CHECK_FALSE(find_hyperbolic_split(diag({3, 3}, {1, 1}, 3)).has_value());
    CHECK_FALSE(find_hyperbolic_split(diag({3}, {1}, 3)).has_value());
    const auto empty = find_hyperbolic_split(FiniteForm({}, {}, 1));
    REQUIRE(empty.has_value());
    CHECK(empty->a.empty());
    CHECK(empty->b.empty());

    const FiniteForm h4({4, 4}, {{0, 1}, {1, 0}}, 4);
    const auto s4 = find_hyperbolic_split(h4);
    REQUIRE(s4.has_value());
    CHECK(verify_split(h4, *s4));
    // Every isotropic subgroup of order 4 contains (2, 2).
    CHECK_FALSE(find_hyperbolic_split(diag({4, 4}, {1, 3}, 4)).has_value());
    CHECK_FALSE(find_hyperbolic_split(diag({4, 4}, {1, 1}, 4)).has_value());
}

TEST_CASE("hyperbolicity matches subgroup brute force") {
    std::mt19937_64 rng(8);
    int checked = 0;
    while (checked < 120) {
        const auto f = random_form(rng);
        if (!f) continue;
        ++checked;
        const auto split = find_hyperbolic_split(*f);
        CHECK(split.has_value() == brute(*f).hyperbolic());
        if (split) {
            CHECK(verify_split(*f, *split));
            CHECK(is_perfect_square(f->size()));
        }
        // The witness does not depend on the number of workers.
        for (unsigned threads : {2u, 8u}) {
            const auto again = find_hyperbolic_split(*f, threads);
            REQUIRE(again.has_value() == split.has_value());
            if (split) {
                CHECK(again->a == split->a);
                CHECK(again->b == split->b);
            }
        }
    }
}

TEST_CASE("isomorphism") {
    const FiniteForm a = diag({3, 3}, {1, 2}, 3);
    const FiniteForm b({3, 3}, {{0, 1}, {1, 0}}, 3);
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(diag({3, 3}, {1, 1}, 3), b));
    CHECK_FALSE(isomorphic(diag({9}, {1}, 9), b));
    CHECK(isomorphic(diag({5}, {1}, 5), diag({5}, {4}, 5)));
    CHECK_FALSE(isomorphic(diag({5}, {1}, 5), diag({5}, {2}, 5)));
    CHECK(isomorphic(diag({2, 3}, {3, 2}, 6), diag({6}, {5}, 6)));
    CHECK_FALSE(isomorphic(diag({2, 2}, {1, 1}, 2), FiniteForm({2, 2}, {{0, 1}, {1, 0}}, 2)));
}

TEST_CASE("greedy orthogonal pieces reproduce the form") {
    std::mt19937_64 rng(12);
    int checked = 0;
    while (checked < 80) {
        const auto f = random_form(rng);
        if (!f) continue;
        ++checked;
        const auto pieces = orthogonal_cyclic_pieces(*f);
        bool odd = f->size() % 2 == 1;
        if (odd) REQUIRE(pieces.has_value());
        if (!pieces) continue;
        std::vector<std::int64_t> orders;
        std::vector<std::int64_t> nums;
        std::int64_t scale = 1;
        for (const auto& p : *pieces) scale = std::lcm(scale, p.order);
        for (const auto& p : *pieces) {
            orders.push_back(p.order);
            nums.push_back(static_cast<std::int64_t>(p.value.num() * (scale / p.value.den())));
            CHECK(f->order(p.generator) == p.order);
            CHECK(f->value(p.generator, p.generator) == p.value);
        }
        for (std::size_t i = 0; i < pieces->size(); ++i)
            for (std::size_t j = 0; j < i; ++j) CHECK(f->value((*pieces)[i].generator, (*pieces)[j].generator).is_zero());
        CHECK(isomorphic(diag(orders, nums, scale), *f));
    }
}
