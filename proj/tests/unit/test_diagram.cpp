#include "heegaard/diagram.hpp"
#include "heegaard/homology.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace heegaard;

namespace {

AbelianGroup group(std::size_t free_rank, IntVector factors) { return AbelianGroup{free_rank, std::move(factors)}; }

}  // namespace

TEST_CASE("from_gluing") {
    const auto id = from_gluing(SymplecticMap::identity(1));
    CHECK(id.plus().rows() == IntMatrix{{1, 0}});
    CHECK(first_homology(id) == group(1, {}));

    const auto rot = from_gluing(SymplecticMap::rotation());
    CHECK(rot.plus().rows() == IntMatrix{{0, -1}});
    CHECK(first_homology(rot).is_trivial());

    const auto shear = from_gluing(SymplecticMap::shear());
    CHECK(shear.plus().rows() == IntMatrix{{1, 1}});
    CHECK(first_homology(shear).is_trivial());
}

TEST_CASE("lens") {
    const auto l31 = lens(3, 1);
    CHECK(l31.minus().rows() == IntMatrix{{1, 0}});
    CHECK(l31.plus().rows() == IntMatrix{{1, 3}});
    CHECK(first_homology(l31) == group(0, {3}));
    CHECK(first_homology(lens(1, 0)).is_trivial());
    CHECK(first_homology(lens(2, 1)) == group(0, {2}));
    CHECK(lens(5, 7) == lens(5, 2));
    CHECK(lens(5, -3) == lens(5, 2));
    CHECK_THROWS_AS(lens(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(lens(0, 1), std::invalid_argument);
}

TEST_CASE("stabilizations") {
    const auto l31 = lens(3, 1);
    CHECK(bar_stabilize(l31, 0) == l31);
    CHECK(hat_stabilize(l31, 0) == l31);
    CHECK(first_homology(bar_stabilize(l31, 1)) == group(0, {3}));
    CHECK(first_homology(hat_stabilize(l31, 2)) == group(2, {3}));
    const auto bar = bar_stabilize(l31, 2);
    CHECK(bar.genus() == 3);
    CHECK(intersection_matrix(bar) == block_diagonal(IntMatrix{{3}}, IntMatrix::identity(2)));
}

TEST_CASE("connected sums") {
    const auto l31 = lens(3, 1);
    CHECK(connected_sum(l31, HeegaardDiagramH1::empty()) == l31);
    CHECK(connected_sum(HeegaardDiagramH1::empty(), l31) == l31);
    CHECK(first_homology(connected_sum(lens(2, 1), lens(2, 1))) == group(0, {2, 2}));
    CHECK(first_homology(connected_sum(l31, lens(3, 2))) == group(0, {3, 3}));
    CHECK(first_homology(connected_sum(lens(2, 1), lens(3, 1))) == group(0, {6}));
}

TEST_CASE("mirror and fixture B") {
    const auto m = mirror(lens(3, 1));
    CHECK(m.minus().rows() == IntMatrix{{-1, 0}});
    CHECK(m.plus().rows() == IntMatrix{{-1, 3}});
    CHECK(mirror(mirror(lens(7, 3))) == lens(7, 3));
    const auto b = b_fixture();
    CHECK(b.genus() == 3);
    CHECK(first_homology(b) == group(1, {2, 2}));
}

TEST_CASE("constructor outputs are Lagrangian on both sides") {
    std::mt19937_64 rng(101);
    oracle::DiagramFilter f;
    f.max_entry = 5;
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = oracle::random_diagram(rng, f);
        for (const auto& e : {bar_stabilize(d, 2), hat_stabilize(d, 1), connected_sum(d, lens(5, 2)), mirror(d)}) {
            CHECK(is_lagrangian(e.minus().rows(), e.genus()));
            CHECK(is_lagrangian(e.plus().rows(), e.genus()));
        }
    }
}
