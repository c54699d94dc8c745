#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incalg/rng.hpp"

using namespace incalg;

namespace {

const FieldSpec Q{0};

Matrix scalar_map(const Scalar& c) {
    Matrix m(1, 1, c.field());
    m.at(0, 0) = c;
    return m;
}

}  // namespace

TEST_CASE("verify_rep: identity diamond ok, mismatched paths flagged, chains vacuous") {
    auto d = std::make_shared<const Poset>(Poset::diamond());
    Representation ok = canonical_rep(d, Q);
    CHECK_FALSE(verify_rep(ok));

    Representation bad = canonical_rep(d, Q);
    // Route through b scaled by 2: the two Hasse paths from 1 down to 0 differ.
    bad.cover_maps[{d->index("b"), d->index("1")}] = scalar_map(Scalar(Q, 2));
    auto v = verify_rep(bad);
    REQUIRE(v);
    CHECK(v->x == d->index("0"));
    CHECK(v->y == d->index("1"));
    CHECK(v->path1 != v->path2);

    auto ch = std::make_shared<const Poset>(Poset::chain(4));
    Rng rng(1);
    Representation any{ch, Q, {2, 1, 2, 1}, {}};
    for (const auto& [x, y] : ch->covers())
        any.cover_maps[{x, y}] = random_matrix(rng, any.dims[x], any.dims[y], Q);
    CHECK_FALSE(verify_rep(any));  // unique paths: vacuously functorial
}

TEST_CASE("rep_to_module on simples, the canonical chain, and zero") {
    auto ch = std::make_shared<const Poset>(Poset::chain(3));
    auto kp = std::make_shared<const Algebra>(incidence_algebra(*ch, Q));
    auto pairs = incidence_basis_pairs(*ch);

    RightModule sx = rep_to_module(simple_rep(ch, Q, 0), kp);
    CHECK(sx.dim == 1);
    CHECK_FALSE(verify_module(sx));
    for (size_t i = 0; i < pairs.size(); ++i) {
        bool is_exx = pairs[i] == std::pair<size_t, size_t>{0, 0};
        CHECK(sx.action[i].at(0, 0).is_one() == is_exx);
    }

    RightModule canon = rep_to_module(canonical_rep(ch, Q), kp);
    CHECK(canon.dim == 3);
    CHECK_FALSE(verify_module(canon));
    // a_{xy} maps the y-block to the x-block by 1 (blocks in element order).
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        CHECK(canon.action[i].at(y, x).is_one());
    }

    Representation zero{ch, Q, {0, 0, 0}, {}};
    for (const auto& [x, y] : ch->covers()) zero.cover_maps[{x, y}] = Matrix(0, 0, Q);
    CHECK(rep_to_module(zero, kp).dim == 0);
}

TEST_CASE("module_to_rep recovers block dimensions of the regular module") {
    auto ch = std::make_shared<const Poset>(Poset::chain(2));
    auto kp = std::make_shared<const Algebra>(incidence_algebra(*ch, Q));
    Representation r = module_to_rep(regular_module(kp), ch);
    CHECK_FALSE(verify_rep(r));
    CHECK(r.dims == std::vector<size_t>{2, 1});

    // A module whose idempotent images do not fill the space is rejected:
    // the zero action of everything on a 1-dim space is not unital over KP.
    RightModule broken{kp, 1, {}};
    for (size_t i = 0; i < kp->dim(); ++i) broken.action.push_back(Matrix(1, 1, Q));
    CHECK_THROWS_AS(module_to_rep(broken, ch), NotUnitalDecomposition);
}

TEST_CASE("round trip preserves dimension vectors") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        Poset p = random_poset(rng, 2 + rng.below(4));
        auto pp = std::make_shared<const Poset>(p);
        auto kp = std::make_shared<const Algebra>(incidence_algebra(p, Q));
        Representation m = random_rep(rng, pp, Q, 2);
        REQUIRE_FALSE(verify_rep(m));
        Representation back = module_to_rep(rep_to_module(m, kp), pp);
        CHECK(back.dims == m.dims);
        CHECK_FALSE(verify_rep(back));
    }
}

TEST_CASE("canonical, simple, projective representations") {
    auto d = std::make_shared<const Poset>(Poset::diamond());
    Representation canon = canonical_rep(d, Q);
    CHECK(multiplicity_vector(canon) == std::vector<size_t>{1, 1, 1, 1});

    Representation pa = projective_rep(d, Q, d->index("a"));
    for (size_t x = 0; x < d->size(); ++x)
        CHECK((pa.dims[x] == 1) == d->leq(x, d->index("a")));

    Representation s = simple_rep(d, Q, d->index("b"));
    CHECK(s.dims == std::vector<size_t>{0, 0, 1, 0});

    Representation sum = direct_sum(canon, s);
    CHECK(multiplicity_vector(sum) == std::vector<size_t>{1, 1, 2, 1});
    CHECK_FALSE(verify_rep(sum));
}

TEST_CASE("hom_reps on simples and the canonical representation") {
    auto d = std::make_shared<const Poset>(Poset::diamond());
    Representation canon = canonical_rep(d, Q);
    for (size_t x = 0; x < d->size(); ++x) {
        Representation sx = simple_rep(d, Q, x);
        CHECK(hom_reps(sx, sx).dim() == 1);
        // Hom(canonical, S_x) = 1 iff x is maximal.
        bool maximal = true;
        for (size_t y = 0; y < d->size(); ++y)
            if (d->less(x, y)) maximal = false;
        CHECK(hom_reps(canon, sx).dim() == (maximal ? 1u : 0u));
        for (size_t y = 0; y < d->size(); ++y)
            if (y != x) CHECK(hom_reps(sx, simple_rep(d, Q, y)).dim() == 0);
    }

    auto ch = std::make_shared<const Poset>(Poset::chain(3));
    Representation cc = canonical_rep(ch, Q);
    CHECK(hom_reps(cc, simple_rep(ch, Q, 2)).dim() == 1);
    CHECK(hom_reps(cc, simple_rep(ch, Q, 0)).dim() == 0);
}

TEST_CASE("the functor to modules is fully faithful on hom dimensions") {
    Rng rng(43);
    for (int t = 0; t < 8; ++t) {
        Poset p = random_poset(rng, 2 + rng.below(3));
        auto pp = std::make_shared<const Poset>(p);
        auto kp = std::make_shared<const Algebra>(incidence_algebra(p, Q));
        Representation m = random_rep(rng, pp, Q, 2);
        Representation n = random_rep(rng, pp, Q, 2);
        CHECK(hom_reps(m, n).dim() ==
              hom_modules(rep_to_module(m, kp), rep_to_module(n, kp)).dim());
    }
}

TEST_CASE("sheaf sections: stalks, forced sections, empty set") {
    auto d = std::make_shared<const Poset>(Poset::diamond());
    Rng rng(47);
    Representation m = random_rep(rng, d, Q, 2);
    for (size_t x = 0; x < d->size(); ++x)
        CHECK(sheaf_sections(m, d->down_set(x)).dim == m.dims[x]);

    Representation canon = canonical_rep(d, Q);
    std::vector<size_t> u{d->index("0"), d->index("a"), d->index("b")};
    CHECK(sheaf_sections(canon, u).dim == 1);
    CHECK(sheaf_sections(canon, {}).dim == 0);
    CHECK_THROWS_AS(sheaf_sections(canon, {d->index("1")}), NotOpen);
}

TEST_CASE("gluing: disjoint union, diamond legs, nested opens") {
    auto two = std::make_shared<const Poset>(
        Poset::from_generators({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
    Rng rng(53);
    Representation m = random_rep(rng, two, Q, 2);
    std::vector<size_t> u{two->index("a"), two->index("b")};
    std::vector<size_t> v{two->index("c"), two->index("d")};
    CHECK(check_gluing(m, u, v));
    CHECK(sheaf_sections(m, {u[0], u[1], v[0], v[1]}).dim ==
          sheaf_sections(m, u).dim + sheaf_sections(m, v).dim);

    auto d = std::make_shared<const Poset>(Poset::diamond());
    Representation md = random_rep(rng, d, Q, 2);
    CHECK(check_gluing(md, d->down_set("a"), d->down_set("b")));
    CHECK(check_gluing(md, d->down_set("0"), d->down_set("a")));  // nested
}
