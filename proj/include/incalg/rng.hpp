#pragma once

#include <cstdint>

#include "incalg/rep.hpp"

namespace incalg {

/// xoshiro256** generator, seeded through splitmix64 so that any 64-bit seed
/// yields a well-mixed state. Deterministic across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next();
    /// Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
    uint64_t below(uint64_t bound);
    /// Uniform scalar with numerator in [-max_abs, max_abs] (denominator 1 over Q).
    Scalar scalar(FieldSpec f, long max_abs = 5);
    Scalar nonzero_scalar(FieldSpec f, long max_abs = 5);

private:
    uint64_t s_[4];
};

/// Random poset on n elements: a random relation on a shuffled order, closed
/// transitively. Labels "x0", ..., density in percent.
Poset random_poset(Rng& rng, size_t n, unsigned density_percent = 40);

Matrix random_matrix(Rng& rng, size_t rows, size_t cols, FieldSpec f, long max_abs = 3);
Matrix random_invertible(Rng& rng, size_t n, FieldSpec f, long max_abs = 3);

/// Random representation with fiber dimensions in [0, max_dim].
Representation random_rep(Rng& rng, PosetPtr p, FieldSpec f, size_t max_dim = 3);

}  // namespace incalg
