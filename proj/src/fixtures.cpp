#include "incalg/fixtures.hpp"

#include <algorithm>

namespace incalg {
namespace fixtures {

Algebra dual_numbers(FieldSpec f) {
    Scalar one = Scalar::one(f);
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> c{
        {0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
    return Algebra(f, {"1", "eps"}, c, {one, Scalar::zero(f)});
}

Algebra a3_with_relation(FieldSpec f) {
    Scalar one = Scalar::one(f);
    // 0:ex 1:ey 2:ez 3:a 4:b, with a = ey·a·ex, b = ez·b·ey and b·a = 0.
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> c{
        {0, 0, 0, one}, {1, 1, 1, one}, {2, 2, 2, one},
        {3, 0, 3, one}, {1, 3, 3, one}, {4, 1, 4, one}, {2, 4, 4, one}};
    Vec unit{one, one, one, Scalar::zero(f), Scalar::zero(f)};
    return Algebra(f, {"ex", "ey", "ez", "a", "b"}, c, unit);
}

Algebra ringel_qform() {
    FieldSpec f{0};
    Scalar one = Scalar::one(f), neg = -one;
    // 0:E1 1:I1 2:E2 3:I2 4:U 5:IU 6:V 7:IV
    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> c;
    auto put = [&](size_t i, size_t j, size_t k, const Scalar& v) {
        c.push_back({i, j, k, v});
    };
    // D1 = Q(i) on {E1, I1}.
    put(0, 0, 0, one); put(0, 1, 1, one); put(1, 0, 1, one); put(1, 1, 0, neg);
    // D2 = Q(i) on {E2, I2}.
    put(2, 2, 2, one); put(2, 3, 3, one); put(3, 2, 3, one); put(3, 3, 2, neg);
    // M = e2·A·e1 on {U, IU, V, IV}: left D2-action.
    put(2, 4, 4, one); put(2, 5, 5, one); put(2, 6, 6, one); put(2, 7, 7, one);
    put(3, 4, 5, one); put(3, 5, 4, neg); put(3, 6, 7, one); put(3, 7, 6, neg);
    // Right D1-action: untwisted on U, conjugation-twisted on V.
    put(4, 0, 4, one); put(5, 0, 5, one); put(6, 0, 6, one); put(7, 0, 7, one);
    put(4, 1, 5, one); put(5, 1, 4, neg); put(6, 1, 7, neg); put(7, 1, 6, one);
    Vec unit = zero_vec(8, f);
    unit[0] = one;
    unit[2] = one;
    return Algebra(f, {"E1", "I1", "E2", "I2", "U", "IU", "V", "IV"}, c, unit);
}

Poset boundary_tetra() {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> faces;
    for (int a = 1; a <= 4; ++a) faces.push_back({std::to_string(a)});
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            faces.push_back({std::to_string(a), std::to_string(b)});
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int cc = b + 1; cc <= 4; ++cc)
                faces.push_back({std::to_string(a), std::to_string(b), std::to_string(cc)});
    auto name = [](const std::vector<std::string>& face) {
        std::string s;
        for (const auto& v : face) s += v;
        return s;
    };
    for (const auto& face : faces) labels.push_back(name(face));
    std::vector<std::pair<std::string, std::string>> gens;
    for (const auto& small : faces)
        for (const auto& big : faces)
            if (small.size() < big.size() &&
                std::includes(big.begin(), big.end(), small.begin(), small.end()))
                gens.push_back({name(small), name(big)});
    return Poset::from_generators(labels, gens);
}

TwoCocycle boundary_tetra_cocycle(PosetPtr p, const Scalar& lambda) {
    IntMatrix d = coboundary_matrix(*p);
    SnfResult snf = smith_normal_form(d);
    size_t rank = 0;
    while (rank < std::min(d.rows(), d.cols()) && snf.s.at(rank, rank) != 0) ++rank;
    if (rank >= d.rows()) throw std::logic_error("expected a free cokernel summand");
    // Exponent vector from the first cokernel row of U; any nonzero image of
    // it under U certifies non-triviality.
    TwoCocycle c(p, lambda.field());
    auto two_chains = p->chains(2);
    for (size_t j = 0; j < two_chains.size(); ++j) {
        const mpz_class& e = snf.u.at(rank, j);
        if (e != 0)
            c.set(two_chains[j][0], two_chains[j][1], two_chains[j][2],
                  scalar_pow(lambda, e));
    }
    return c;
}

}  // namespace fixtures
}  // namespace incalg
