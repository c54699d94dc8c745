#pragma once

#include <gmpxx.h>

#include <string>

#include "incalg/errors.hpp"

namespace incalg {

/// Base field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    unsigned long characteristic = 0;

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;

    /// Throws unless characteristic is 0 or prime.
    void validate() const;

    std::string str() const {
        return is_rational() ? "Q" : "F_" + std::to_string(characteristic);
    }
};

/// An exact field element: a reduced fraction over Q, or a residue in [0,p).
class Scalar {
public:
    Scalar() : field_{0}, v_(0) {}
    Scalar(FieldSpec field, const mpq_class& value);
    Scalar(FieldSpec field, long value);

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }
    /// Parses "a", "-a" or "a/b" in decimal.
    static Scalar parse(FieldSpec f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce();
    void check_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class v_;  // over F_p: an integer residue with denominator 1
};

}  // namespace incalg
