#include "incalg/cohomology.hpp"

#include "incalg/numtheory.hpp"

namespace incalg {

Scalar scalar_pow(const Scalar& base, const mpz_class& exponent) {
    Scalar b = base;
    mpz_class e = exponent;
    if (e < 0) {
        b = base.inverse();
        e = -e;
    }
    Scalar acc = Scalar::one(base.field());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

IntMatrix coboundary_matrix_k(const Poset& p, size_t k) {
    auto rows_chains = p.chains(k + 1);
    auto col_chains = p.chains(k);
    std::map<std::vector<size_t>, size_t> col_index;
    for (size_t i = 0; i < col_chains.size(); ++i) col_index[col_chains[i]] = i;
    IntMatrix d(rows_chains.size(), col_chains.size());
    for (size_t r = 0; r < rows_chains.size(); ++r) {
        const auto& ch = rows_chains[r];
        int sign = 1;
        for (size_t omit = 0; omit < ch.size(); ++omit) {
            std::vector<size_t> face;
            for (size_t i = 0; i < ch.size(); ++i)
                if (i != omit) face.push_back(ch[i]);
            d.at(r, col_index.at(face)) += sign;
            sign = -sign;
        }
    }
    return d;
}

IntMatrix coboundary_matrix(const Poset& p) { return coboundary_matrix_k(p, 1); }

TrivializeResult trivialize(const Poset& p, const TwoCocycle& c) {
    if (auto bad = cocycle_violation(c))
        throw InvalidCocycle("not a cocycle: law fails at chain through " + p.label((*bad)[0]));
    FieldSpec f = c.field();
    auto two_chains = p.chains(2);
    auto pairs = p.chains(1);  // strict pairs, lexicographic
    IntMatrix d = coboundary_matrix(p);
    SnfResult snf = smith_normal_form(d);
    size_t m = two_chains.size(), n = pairs.size();

    // Right-hand side transported by U, multiplicatively.
    std::vector<Scalar> b;
    for (const auto& ch : two_chains) b.push_back(c.at(ch[0], ch[1], ch[2]));
    auto transported = [&](size_t i) {
        Scalar acc = Scalar::one(f);
        for (size_t j = 0; j < m; ++j) {
            const mpz_class& e = snf.u.at(i, j);
            if (e != 0) acc *= scalar_pow(b[j], e);
        }
        return acc;
    };
    auto obstruction_row = [&](size_t i, const Scalar& value, const mpz_class& power) {
        Obstruction obs{{}, value, power};
        for (size_t j = 0; j < m; ++j)
            if (snf.u.at(i, j) != 0)
                obs.combination.push_back({{two_chains[j][0], two_chains[j][1], two_chains[j][2]},
                                           snf.u.at(i, j)});
        return obs;
    };

    size_t rank = 0;
    while (rank < std::min(m, n) && snf.s.at(rank, rank) != 0) ++rank;

    std::vector<Scalar> y(n, Scalar::one(f));
    for (size_t i = 0; i < rank; ++i) {
        Scalar rhs = transported(i);
        mpz_class di = snf.s.at(i, i);
        auto root = nth_root(f, rhs, di.get_ui());
        if (!root) return obstruction_row(i, rhs, di);
        y[i] = *root;
    }
    for (size_t i = rank; i < m; ++i) {
        Scalar rhs = transported(i);
        if (!rhs.is_one()) return obstruction_row(i, rhs, 0);
    }

    // x = V·y multiplicatively.
    Gauge g;
    for (size_t j = 0; j < n; ++j) {
        Scalar xj = Scalar::one(f);
        for (size_t k = 0; k < n; ++k) {
            const mpz_class& e = snf.v.at(j, k);
            if (e != 0) xj *= scalar_pow(y[k], e);
        }
        g.values[{pairs[j][0], pairs[j][1]}] = xj;
    }
    // Pairs not touched by any 2-chain stay at 1; fill any missing explicitly.
    for (const auto& pr : p.strict_pairs())
        g.values.try_emplace({pr.first, pr.second}, Scalar::one(f));

    // Exact substitution check.
    for (const auto& ch : two_chains) {
        Scalar lhs = g.at(ch[0], ch[1]) * g.at(ch[1], ch[2]);
        Scalar rhs = c.at(ch[0], ch[1], ch[2]) * g.at(ch[0], ch[2]);
        if (lhs != rhs) throw std::logic_error("gauge substitution check failed");
    }
    return g;
}

}  // namespace incalg
