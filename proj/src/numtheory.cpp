#include "incalg/numtheory.hpp"

#include <algorithm>
#include <map>

namespace incalg {

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // n composite, odd, not a prime power edge case handled by caller loop.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b97f4a7c15UL);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = abs(x - y);
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& acc) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        acc[n] += 1;
        return;
    }
    // small trial division first
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n % p == 0) {
            acc[mpz_class(p)] += 1;
            factor_into(n / p, acc);
            return;
        }
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, acc);
    factor_into(n / d, acc);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    std::map<mpz_class, unsigned> acc;
    factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> result{1};
    for (const auto& [p, e] : factorize(n)) {
        size_t base = result.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
        }
    }
    return result;
}

namespace {

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// Deflate monic poly by root r: coeffs / (t - r).
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& r) {
    size_t d = coeffs.size() - 1;
    std::vector<Scalar> q(d, Scalar::zero(r.field()));
    Scalar carry = coeffs[d];
    for (size_t i = d; i-- > 0;) {
        q[i] = carry;
        carry = coeffs[i] + carry * r;
    }
    return q;
}

}  // namespace

std::vector<Scalar> polynomial_roots(FieldSpec f, const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> roots;
    std::vector<Scalar> cur = coeffs;
    if (!f.is_rational()) {
        for (unsigned long r = 0; r < f.characteristic; ++r) {
            Scalar s(f, static_cast<long>(r));
            while (cur.size() > 1 && eval_poly(cur, s).is_zero()) {
                roots.push_back(s);
                cur = deflate(cur, s);
            }
        }
    } else {
        // Rational roots of a monic rational polynomial: substitute t = y/N for
        // N the lcm of coefficient denominators, making an integer monic
        // polynomial in y whose integer roots divide its constant term.
        while (cur.size() > 1) {
            size_t d = cur.size() - 1;
            Scalar zero = Scalar::zero(f);
            if (cur[0].is_zero()) {
                roots.push_back(zero);
                cur = deflate(cur, zero);
                continue;
            }
            mpz_class den = 1;
            for (const auto& c : cur) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den().get_mpz_t());
            // g(y) = N^d f(y/N), integer monic; g(0) = N^d f(0) != 0.
            std::vector<mpz_class> g(d + 1);
            mpz_class nk = 1;
            for (size_t i = d + 1; i-- > 0;) {
                mpq_class scaled = cur[i].value() * mpq_class(nk);
                scaled.canonicalize();
                if (scaled.get_den() != 1) throw std::logic_error("root clearing failed");
                g[i] = scaled.get_num();
                nk *= den;
            }
            auto eval_g = [&](const mpz_class& y) {
                mpz_class acc = 0;
                for (size_t i = d + 1; i-- > 0;) acc = acc * y + g[i];
                return acc;
            };
            bool found = false;
            for (const mpz_class& dv : divisors(abs(g[0]))) {
                for (int sign : {1, -1}) {
                    mpz_class cand = sign * dv;
                    if (eval_g(cand) == 0) {
                        Scalar r(f, mpq_class(cand, den));
                        roots.push_back(r);
                        cur = deflate(cur, r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) break;  // no further rational roots
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
        return a.value() < b.value();
    });
    return roots;
}

std::optional<Scalar> nth_root(FieldSpec f, const Scalar& lambda, unsigned long d) {
    if (lambda.is_zero() || d == 0) return std::nullopt;
    if (d == 1) return lambda;
    if (!f.is_rational()) {
        for (unsigned long r = 1; r < f.characteristic; ++r) {
            Scalar s(f, static_cast<long>(r));
            Scalar acc = Scalar::one(f);
            for (unsigned long i = 0; i < d; ++i) acc *= s;
            if (acc == lambda) return s;
        }
        return std::nullopt;
    }
    mpq_class q = lambda.value();
    bool negative = q < 0;
    if (negative && d % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) == 0) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    if (negative) r = -r;
    return Scalar(f, r);
}

}  // namespace incalg
