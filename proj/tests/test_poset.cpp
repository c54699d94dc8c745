#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "incalg/poset.hpp"
#include "incalg/rng.hpp"

using namespace incalg;

TEST_CASE("from_generators closes transitively") {
    Poset p = Poset::from_generators({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK(p.leq(p.index("x"), p.index("z")));
    CHECK_FALSE(p.leq(p.index("z"), p.index("x")));
    CHECK(p.leq(0, 0));
}

TEST_CASE("diamond has 9 comparable ordered pairs") {
    Poset d = Poset::diamond();
    CHECK(d.comparable_pairs().size() == 9);
    CHECK(d.strict_pairs().size() == 5);
}

TEST_CASE("antisymmetry violation carries the cycle") {
    CHECK_THROWS_AS(Poset::from_generators({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                    AntisymmetryViolation);
    try {
        Poset::from_generators({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    } catch (const AntisymmetryViolation& e) {
        CHECK(e.cycle.size() >= 2);
    }
}

TEST_CASE("hasse keeps only covers") {
    Quiver q = Poset::chain(3).hasse();
    CHECK(q.arrows.size() == 2);
    CHECK(q.has_arrow(0, 1));
    CHECK(q.has_arrow(1, 2));
    CHECK_FALSE(q.has_arrow(0, 2));

    CHECK(Poset::diamond().hasse().arrows.size() == 4);
    CHECK(Poset::antichain(3).hasse().arrows.empty());
}

TEST_CASE("down sets are Alexandrov opens") {
    Poset d = Poset::diamond();
    CHECK(d.down_set("1").size() == 4);
    auto da = d.down_set("a");
    CHECK(da == std::vector<size_t>{d.index("0"), d.index("a")});
    CHECK(d.down_set("0") == std::vector<size_t>{d.index("0")});
    CHECK(d.is_down_closed(da));
    CHECK_THROWS_AS(d.down_set("missing"), UnknownElement);
}

TEST_CASE("connectivity") {
    CHECK(Poset::chain(4).is_connected());
    CHECK(Poset::diamond().is_connected());
    CHECK_FALSE(Poset::from_generators({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})
                    .is_connected());
}

TEST_CASE("chain enumeration") {
    Poset d = Poset::diamond();
    auto ch2 = d.chains(2);
    REQUIRE(ch2.size() == 2);
    CHECK(d.label(ch2[0][1]) == "a");
    CHECK(d.label(ch2[1][1]) == "b");
    CHECK(Poset::chain(3).chains(2).size() == 1);
    CHECK(Poset::antichain(3).chains(1).empty());
    CHECK(d.chains(0).size() == 4);
}

TEST_CASE("random posets: hasse closure reproduces leq, no shortcut arrows") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(seed);
        Poset p = random_poset(rng, 2 + rng.below(6));
        Quiver h = p.hasse();
        size_t n = p.size();
        // No arrow admits an intermediate element.
        for (const auto& a : h.arrows)
            for (size_t z = 0; z < n; ++z)
                CHECK_FALSE((p.less(a.source, z) && p.less(z, a.target)));
        // Reflexive-transitive closure of the arrows equals leq.
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) reach[i][i] = true;
        for (const auto& a : h.arrows) reach[a.source][a.target] = true;
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) CHECK(reach[i][j] == p.leq(i, j));
        // Chains(1) counts strict pairs; height bound kills long chains.
        CHECK(p.chains(1).size() == p.strict_pairs().size());
        CHECK(p.chains(n).empty());
        for (size_t x = 0; x < n; ++x) {
            auto ds = p.down_set(x);
            CHECK(p.is_down_closed(ds));
            CHECK(std::find(ds.begin(), ds.end(), x) != ds.end());
        }
    }
}

TEST_CASE("quiver cycle detection") {
    Quiver q{{"a", "b"}, {{0, 1}, {1, 0}}};
    CHECK_FALSE(q.find_cycle().empty());
    Quiver loop{{"a"}, {{0, 0}}};
    CHECK(loop.find_cycle() == std::vector<size_t>{0});
    CHECK(Poset::chain(5).hasse().find_cycle().empty());
}

TEST_CASE("quiver components") {
    Quiver q{{"a", "b", "c", "d"}, {{0, 1}, {3, 2}}};
    CHECK(q.component_ids() == std::vector<size_t>{0, 0, 1, 1});
}

TEST_CASE("poset isomorphism search") {
    Poset d = Poset::diamond();
    Poset d2 = Poset::from_generators({"p", "q", "r", "s"},
                                      {{"q", "p"}, {"r", "p"}, {"s", "q"}, {"s", "r"}});
    auto iso = poset_isomorphism(d, d2);
    REQUIRE(iso);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(d.leq(i, j) == d2.leq((*iso)[i], (*iso)[j]));
    CHECK_FALSE(poset_isomorphism(Poset::chain(4), Poset::diamond()));
    CHECK_FALSE(poset_isomorphism(Poset::chain(2), Poset::chain(3)));
}
