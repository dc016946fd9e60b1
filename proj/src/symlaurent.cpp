#include "qaskey/symlaurent.hpp"

#include <sstream>

namespace qaskey {

namespace {
const Scalar kZero(0);
}

SymLaurent1::SymLaurent1(const Scalar& constant) : c0_(constant) {}

const Scalar& SymLaurent1::at(long k) const {
    if (k == 0) return c0_;
    if (k < 0 || k > static_cast<long>(ck_.size())) return kZero;
    return ck_[k - 1];
}

void SymLaurent1::set(long k, const Scalar& v) {
    if (k < 0) throw Error("negative SymLaurent index");
    if (k == 0) {
        c0_ = v;
        return;
    }
    if (k > static_cast<long>(ck_.size())) ck_.resize(k, kZero);
    ck_[k - 1] = v;
    trim();
}

void SymLaurent1::trim() {
    while (!ck_.empty() && ck_.back().is_zero()) ck_.pop_back();
}

long SymLaurent1::degree() const {
    if (!ck_.empty()) return static_cast<long>(ck_.size());
    return c0_.is_zero() ? -1 : 0;
}

bool SymLaurent1::is_zero() const { return ck_.empty() && c0_.is_zero(); }

SymLaurent1 SymLaurent1::operator-() const {
    SymLaurent1 out(*this);
    out.c0_ = -out.c0_;
    for (auto& v : out.ck_) v = -v;
    return out;
}

SymLaurent1 operator+(const SymLaurent1& a, const SymLaurent1& b) {
    SymLaurent1 out;
    out.c0_ = a.c0_ + b.c0_;
    out.ck_.assign(std::max(a.ck_.size(), b.ck_.size()), kZero);
    for (size_t k = 0; k < out.ck_.size(); ++k)
        out.ck_[k] = a.at(static_cast<long>(k) + 1) + b.at(static_cast<long>(k) + 1);
    out.trim();
    return out;
}

SymLaurent1 operator-(const SymLaurent1& a, const SymLaurent1& b) { return a + (-b); }

SymLaurent1 operator*(const SymLaurent1& a, const SymLaurent1& b) {
    // Convolution over the full exponent range; the product is symmetric, so
    // only nonnegative result exponents are collected.
    long da = a.degree() < 0 ? 0 : a.degree();
    long db = b.degree() < 0 ? 0 : b.degree();
    auto full = [](const SymLaurent1& p, long d) {
        std::vector<Scalar> f(2 * d + 1, kZero);  // exponent e at f[e + d]
        f[d] = p.at(0);
        for (long k = 1; k <= d; ++k) {
            f[d + k] = p.at(k);
            f[d - k] = p.at(k);
        }
        return f;
    };
    std::vector<Scalar> fa = full(a, da), fb = full(b, db);
    std::vector<Scalar> fc(fa.size() + fb.size() - 1, kZero);
    for (size_t i = 0; i < fa.size(); ++i) {
        if (fa[i].is_zero()) continue;
        for (size_t j = 0; j < fb.size(); ++j) fc[i + j] += fa[i] * fb[j];
    }
    SymLaurent1 out;
    long off = da + db;  // exponent e at fc[e + off]
    out.c0_ = fc[off];
    for (long k = 1; k <= off; ++k) out.set(k, fc[off + k]);
    return out;
}

SymLaurent1 operator*(const Scalar& s, const SymLaurent1& p) {
    SymLaurent1 out(p);
    out.c0_ = s * out.c0_;
    for (auto& v : out.ck_) v = s * v;
    out.trim();
    return out;
}

SymLaurent1 SymLaurent1::operator/(const Scalar& s) const { return s.inverse() * *this; }

bool operator==(const SymLaurent1& a, const SymLaurent1& b) {
    if (a.c0_ != b.c0_ || a.ck_.size() != b.ck_.size()) return false;
    for (size_t i = 0; i < a.ck_.size(); ++i)
        if (a.ck_[i] != b.ck_[i]) return false;
    return true;
}

Scalar SymLaurent1::evaluate(const Scalar& z) const {
    Scalar acc = c0_;
    Scalar zi = z.inverse();
    Scalar zp(1), zn(1);
    for (long k = 1; k <= degree(); ++k) {
        zp = zp * z;
        zn = zn * zi;
        acc += at(k) * (zp + zn);
    }
    return acc;
}

SymLaurent1 SymLaurent1::substitute_z2() const {
    SymLaurent1 out;
    out.c0_ = c0_;
    for (long k = 1; k <= degree(); ++k)
        if (!at(k).is_zero()) out.set(2 * k, at(k));
    return out;
}

Polynomial1 SymLaurent1::to_poly_x() const {
    // z^k + z^{-k} = 2 T_k(x) at x = (z + 1/z)/2.
    Polynomial1 acc(c0_);
    Polynomial1 tprev(Scalar(1));
    Polynomial1 t = Polynomial1::x();
    Polynomial1 two_x = Scalar(2) * Polynomial1::x();
    for (long k = 1; k <= degree(); ++k) {
        if (!at(k).is_zero()) acc = acc + (Scalar(2) * at(k)) * t;
        Polynomial1 tnext = two_x * t - tprev;
        tprev = t;
        t = tnext;
    }
    return acc;
}

SymLaurent1 SymLaurent1::from_poly_u(const Polynomial1& p) {
    // u^m = sum_j C(m, j) z^{m - 2j}; the z^{-e} mirror carries the same
    // binomial, so each exponent pair is collected once from the j <= m/2 side.
    SymLaurent1 out;
    for (long m = 0; m <= p.degree(); ++m) {
        if (p.at(m).is_zero()) continue;
        Scalar binom(1);  // C(m, j)
        for (long j = 0; 2 * j <= m; ++j) {
            long e = m - 2 * j;
            out.set(e, out.at(e) + p.at(m) * binom);
            binom = binom * Scalar(m - j) / Scalar(j + 1);
        }
    }
    return out;
}

SymLaurent1 SymLaurent1::from_poly_x(const Polynomial1& p) {
    // x^m = 2^{-m} (z + 1/z)^m; delegate to the u expansion.
    Polynomial1 scaled;
    for (long m = 0; m <= p.degree(); ++m)
        if (!p.at(m).is_zero()) scaled.set(m, p.at(m) / Scalar(2).pow(m));
    return from_poly_u(scaled);
}

SymLaurent1 SymLaurent1::divide_by_z_plus_zinv() const {
    if (is_zero()) return SymLaurent1();
    // Multiply by z^{D} and divide the ordinary polynomial by z^2 + 1.
    long d = degree();
    Polynomial1 num;
    num.set(d, at(0));
    for (long k = 1; k <= d; ++k) {
        if (at(k).is_zero()) continue;
        num.set(d + k, at(k));
        num.set(d - k, at(k));
    }
    Polynomial1 div({Scalar(1), Scalar(0), Scalar(1)});  // z^2 + 1
    auto [quot, rem] = num.divmod(div);
    if (!rem.is_zero()) throw NotDivisibleError("not divisible by z + 1/z");
    // quot corresponds to the Laurent quotient times z^{d-1}.
    SymLaurent1 out;
    long off = d - 1;
    out.c0_ = quot.at(off);
    for (long k = 1; k <= off; ++k) {
        if (quot.at(off + k) != quot.at(off - k))
            throw NotDivisibleError("quotient is not symmetric");
        out.set(k, quot.at(off + k));
    }
    return out;
}

SymSplit symlaurent_square_substitute(const SymLaurent1& p) {
    bool has_even = !p.at(0).is_zero(), has_odd = false;
    for (long k = 1; k <= p.degree(); ++k) {
        if (p.at(k).is_zero()) continue;
        (k % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) throw MixedParityError("symmetric Laurent polynomial has mixed parity");
    if (has_odd) {
        SymLaurent1 s = p.divide_by_z_plus_zinv();
        // s has even indices only; halve them.
        SymLaurent1 r(s.at(0));
        for (long k = 1; k <= s.degree(); ++k) {
            if (s.at(k).is_zero()) continue;
            if (k % 2 != 0) throw NotDivisibleError("odd split quotient has odd index");
            r.set(k / 2, s.at(k));
        }
        return {Parity::odd, r};
    }
    SymLaurent1 q(p.at(0));
    for (long k = 2; k <= p.degree(); k += 2) q.set(k / 2, p.at(k));
    return {Parity::even, q};
}

std::string SymLaurent1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 1; --k) {
        if (at(k).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << at(k).str() << ")*(z^" << k << "+z^-" << k << ")";
        first = false;
    }
    if (!c0_.is_zero() || first) {
        if (!first) os << " + ";
        os << "(" << c0_.str() << ")";
    }
    return os.str();
}

}  // namespace qaskey
