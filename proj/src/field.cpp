#include "incalg/field.hpp"

namespace incalg {

void FieldSpec::validate() const {
    if (characteristic == 0) return;
    mpz_class p(characteristic);
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw FieldMismatch("characteristic " + std::to_string(characteristic) + " is not prime");
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field), v_(value) { reduce(); }

Scalar::Scalar(FieldSpec field, long value) : field_(field), v_(value) { reduce(); }

void Scalar::reduce() {
    v_.canonicalize();
    if (field_.is_rational()) return;
    mpz_class p(field_.characteristic);
    mpz_class den = v_.get_den();
    mpz_class num = v_.get_num() % p;
    if (num < 0) num += p;
    if (den != 1) {
        mpz_class dinv;
        mpz_class dmod = den % p;
        if (dmod < 0) dmod += p;
        if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
            throw FieldMismatch("denominator not invertible mod " + std::to_string(field_.characteristic));
        num = (num * dinv) % p;
    }
    v_ = mpq_class(num);
}

void Scalar::check_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldMismatch("division by zero");
    if (field_.is_rational()) return Scalar(field_, 1 / v_);
    mpz_class p(field_.characteristic), inv;
    mpz_class num = v_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

bool Scalar::operator==(const Scalar& o) const {
    check_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    try {
        mpq_class q(text);
        return Scalar(f, q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad scalar literal: " + text);
    }
}

}  // namespace incalg
