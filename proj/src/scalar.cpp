#include "qaskey/scalar.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace qaskey {

namespace {
mpfr_prec_t g_default_prec = 256;
}

// ----------------------------------------------------------------- BigFloat

BigFloat::BigFloat() {
    mpfr_init2(v_, g_default_prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& r, mpfr_prec_t prec) {
    BigFloat out;
    mpfr_set_prec(out.v_, prec);
    mpfr_set_q(out.v_, r.get_mpq_t(), MPFR_RNDN);
    return out;
}

mpfr_prec_t BigFloat::default_precision() { return g_default_prec; }
void BigFloat::set_default_precision(mpfr_prec_t prec) { g_default_prec = prec; }

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(*this);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    BigFloat out(*this);
    mpfr_sqrt(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp() const {
    BigFloat out(*this);
    mpfr_exp(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log() const {
    BigFloat out(*this);
    mpfr_log(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat out(*this);
    mpfr_pow(out.v_, v_, e.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow_int(long e) const {
    BigFloat out(*this);
    mpfr_pow_si(out.v_, v_, e, MPFR_RNDN);
    return out;
}

namespace {
BigFloat bf_binop(const BigFloat& a, const BigFloat& b,
                  int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigFloat out;
    mpfr_prec_t prec = std::max(a.precision(), b.precision());
    mpfr_set_prec(out.raw(), prec);
    op(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bf_binop(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bf_binop(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bf_binop(a, b, mpfr_mul); }

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw Error("BigFloat division by zero");
    return bf_binop(a, b, mpfr_div);
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// ------------------------------------------------------------------- Scalar

std::variant<Rational, GaussianRational, BigFloat> Scalar::canonical(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c;
}

Scalar Scalar::make(const GaussianRational& g) {
    Scalar out;
    if (g.im == 0) {
        out.v_ = g.re;
    } else {
        GaussianRational c = g;
        c.re.canonicalize();
        c.im.canonicalize();
        out.v_ = c;
    }
    return out;
}

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::complex(const Rational& re, const Rational& im) {
    return make(GaussianRational{re, im});
}

Scalar Scalar::parse_rational(const std::string& text) {
    auto bad = [&] { return ConfigParseError("bad rational literal: '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string t = text;
    if (t.find('.') != std::string::npos || t.find('e') != std::string::npos)
        throw ConfigParseError("floating literal not accepted for exact value: '" + text + "'");
    try {
        Rational r(t);
        if (r.get_den() == 0) throw bad();
        r.canonicalize();
        return Scalar(r);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

bool Scalar::is_zero() const {
    if (is_rational()) return std::get<Rational>(v_) == 0;
    if (is_gaussian()) return false;  // im != 0 by invariant
    return std::get<BigFloat>(v_).is_zero();
}

bool Scalar::is_integer() const {
    return is_rational() && std::get<Rational>(v_).get_den() == 1;
}

bool Scalar::is_nonpositive_integer() const {
    return is_integer() && std::get<Rational>(v_) <= 0;
}

long Scalar::to_long() const {
    if (!is_integer()) throw Error("Scalar::to_long on non-integer");
    const Rational& r = std::get<Rational>(v_);
    if (!r.get_num().fits_slong_p()) throw Error("Scalar::to_long overflow");
    return r.get_num().get_si();
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw Error("Scalar is not an exact rational");
    return std::get<Rational>(v_);
}

const BigFloat& Scalar::bigfloat() const {
    if (!is_bigfloat()) throw Error("Scalar is not a BigFloat");
    return std::get<BigFloat>(v_);
}

Scalar Scalar::real() const {
    if (is_gaussian()) return Scalar(std::get<GaussianRational>(v_).re);
    return *this;
}

Scalar Scalar::imag() const {
    if (is_gaussian()) return Scalar(std::get<GaussianRational>(v_).im);
    return Scalar(0);
}

Scalar Scalar::conj() const {
    if (is_gaussian()) {
        const auto& g = std::get<GaussianRational>(v_);
        return make(GaussianRational{g.re, -g.im});
    }
    return *this;
}

Rational Scalar::norm_sq() const {
    if (is_rational()) {
        const Rational& r = std::get<Rational>(v_);
        return r * r;
    }
    if (is_gaussian()) {
        const auto& g = std::get<GaussianRational>(v_);
        return g.re * g.re + g.im * g.im;
    }
    throw Error("norm_sq needs an exact value");
}

Scalar Scalar::abs() const {
    if (is_rational()) return Scalar(Rational(::abs(std::get<Rational>(v_))));
    if (is_bigfloat()) return Scalar(std::get<BigFloat>(v_).abs());
    throw Error("abs of a Gaussian rational is not rational; use norm_sq");
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rational(-std::get<Rational>(v_)));
    if (is_gaussian()) {
        const auto& g = std::get<GaussianRational>(v_);
        return make(GaussianRational{-g.re, -g.im});
    }
    return Scalar(-std::get<BigFloat>(v_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (is_rational()) return Scalar(Rational(1 / std::get<Rational>(v_)));
    if (is_gaussian()) {
        const auto& g = std::get<GaussianRational>(v_);
        Rational n = g.re * g.re + g.im * g.im;
        return make(GaussianRational{g.re / n, -g.im / n});
    }
    return Scalar(BigFloat(1.0, std::get<BigFloat>(v_).precision()) / std::get<BigFloat>(v_));
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc(1);
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

BigFloat Scalar::to_bigfloat(mpfr_prec_t prec) const {
    if (is_rational()) return BigFloat::from_rational(std::get<Rational>(v_), prec);
    if (is_bigfloat()) return std::get<BigFloat>(v_);
    throw Error("cannot convert Gaussian rational to real BigFloat");
}

double Scalar::to_double() const {
    if (is_gaussian()) throw Error("to_double of Gaussian rational");
    if (is_rational()) return std::get<Rational>(v_).get_d();
    return std::get<BigFloat>(v_).to_double();
}

namespace {
GaussianRational as_gauss(const Scalar& s) {
    if (s.is_gaussian()) {
        return GaussianRational{s.real().rational(), s.imag().rational()};
    }
    return GaussianRational{s.rational(), Rational(0)};
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_bigfloat() || b.is_bigfloat()) {
        if (a.is_gaussian() || b.is_gaussian())
            throw Error("no mixed Gaussian/BigFloat arithmetic");
        mpfr_prec_t prec = a.is_bigfloat() ? a.bigfloat().precision() : b.bigfloat().precision();
        if (a.is_bigfloat() && b.is_bigfloat()) prec = std::max(prec, b.bigfloat().precision());
        return Scalar(a.to_bigfloat(prec) + b.to_bigfloat(prec));
    }
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
    GaussianRational x = as_gauss(a), y = as_gauss(b);
    return Scalar::complex(x.re + y.re, x.im + y.im);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_bigfloat() || b.is_bigfloat()) {
        if (a.is_gaussian() || b.is_gaussian())
            throw Error("no mixed Gaussian/BigFloat arithmetic");
        mpfr_prec_t prec = a.is_bigfloat() ? a.bigfloat().precision() : b.bigfloat().precision();
        if (a.is_bigfloat() && b.is_bigfloat()) prec = std::max(prec, b.bigfloat().precision());
        return Scalar(a.to_bigfloat(prec) * b.to_bigfloat(prec));
    }
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
    GaussianRational x = as_gauss(a), y = as_gauss(b);
    return Scalar::complex(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("Scalar division by zero");
    if (a.is_bigfloat() || b.is_bigfloat()) {
        if (a.is_gaussian() || b.is_gaussian())
            throw Error("no mixed Gaussian/BigFloat arithmetic");
        mpfr_prec_t prec = a.is_bigfloat() ? a.bigfloat().precision() : b.bigfloat().precision();
        if (a.is_bigfloat() && b.is_bigfloat()) prec = std::max(prec, b.bigfloat().precision());
        return Scalar(a.to_bigfloat(prec) / b.to_bigfloat(prec));
    }
    if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() / b.rational()));
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_gaussian() != b.is_gaussian()) return false;  // im != 0 invariant
    if (a.is_gaussian()) {
        return a.real().rational() == b.real().rational() &&
               a.imag().rational() == b.imag().rational();
    }
    if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
    if (a.is_bigfloat() && b.is_bigfloat())
        return mpfr_equal_p(a.bigfloat().raw(), b.bigfloat().raw()) != 0;
    const Scalar& f = a.is_bigfloat() ? a : b;
    const Scalar& r = a.is_bigfloat() ? b : a;
    return f.bigfloat().cmp_rational(r.rational()) == 0;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_gaussian() || b.is_gaussian()) throw Error("no order on Gaussian rationals");
    if (a.is_rational() && b.is_rational()) return a.rational() < b.rational();
    if (a.is_bigfloat() && b.is_bigfloat()) return a.bigfloat() < b.bigfloat();
    if (a.is_bigfloat()) return a.bigfloat().cmp_rational(b.rational()) < 0;
    return b.bigfloat().cmp_rational(a.rational()) > 0;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << rational();
    } else if (is_gaussian()) {
        const auto& g = std::get<GaussianRational>(v_);
        os << g.re << (g.im >= 0 ? "+" : "") << g.im << "i";
    } else {
        os << bigfloat().str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// -------------------------------------------------------------------- QBase

QBase::QBase(const Scalar& q_in) : q(q_in) {
    if (!q.is_rational()) throw ParameterConstraintError("q must be an exact rational");
    if (!(q > Scalar(0) && q < Scalar(1)))
        throw ParameterConstraintError("q must satisfy 0 < q < 1");
}

QBase QBase::from_half_base(const Scalar& p) {
    QBase out(p * p);
    out.half_base = p;
    return out;
}

std::optional<long> q_exponent_of(const Scalar& value, const Scalar& q, long max_m) {
    if (!value.is_exact() || !q.is_exact()) return std::nullopt;
    Scalar t = value;
    for (long m = 0; m <= max_m; ++m) {
        if (t.is_one()) return m;
        t = t * q;
    }
    return std::nullopt;
}

}  // namespace qaskey
