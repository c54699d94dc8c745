#pragma once

#include <map>
#include <variant>

#include "incalg/incidence.hpp"
#include "incalg/intmat.hpp"

namespace incalg {

/// Multiplicative 1-cochain: nonzero scalars on strict pairs x<y.
struct Gauge {
    std::map<std::pair<size_t, size_t>, Scalar> values;

    Scalar at(size_t x, size_t y) const {
        auto it = values.find({x, y});
        if (it == values.end()) throw UnknownElement("gauge value missing");
        return it->second;
    }
};

/// Witness that a cocycle is not a coboundary: an integer combination of
/// 2-chains whose product of cocycle values must be (but is not) a d-th power.
struct Obstruction {
    std::vector<std::pair<std::array<size_t, 3>, mpz_class>> combination;
    Scalar value;           // the offending product in K^×
    mpz_class required_power;  // 0 means "must equal 1", d>0 means "must be a d-th power"
};

using TrivializeResult = std::variant<Gauge, Obstruction>;

/// Matrix of δ¹ : C¹(Σ(P)) → C²(Σ(P)), rows indexed by 2-chains, columns by
/// strict pairs, both in lexicographic chain order.
IntMatrix coboundary_matrix(const Poset& p);

/// Matrix of δ^k : C^k → C^{k+1} in the chain bases (alternating signs).
IntMatrix coboundary_matrix_k(const Poset& p, size_t k);

/// Solves δf = c over K^× via Smith normal form and d-th power tests, or
/// produces a checkable obstruction. Returned gauges satisfy
/// f(x,y)·f(y,z) = c(x,y,z)·f(x,z) exactly.
TrivializeResult trivialize(const Poset& p, const TwoCocycle& c);

Scalar scalar_pow(const Scalar& base, const mpz_class& exponent);

}  // namespace incalg
