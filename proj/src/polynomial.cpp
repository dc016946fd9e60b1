#include "qaskey/polynomial.hpp"

#include <sstream>

namespace qaskey {

namespace {
const Scalar kZero(0);
}

Polynomial1::Polynomial1(const Scalar& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial1::Polynomial1(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial1 Polynomial1::monomial(long degree, const Scalar& coeff) {
    Polynomial1 p;
    if (degree < 0) throw Error("monomial degree must be >= 0");
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, kZero);
        p.c_[degree] = coeff;
    }
    return p;
}

void Polynomial1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Polynomial1::at(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
    return c_[i];
}

void Polynomial1::set(long i, const Scalar& v) {
    if (i < 0) throw Error("negative coefficient index");
    if (i >= static_cast<long>(c_.size())) c_.resize(i + 1, kZero);
    c_[i] = v;
    trim();
}

const Scalar& Polynomial1::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Polynomial1 Polynomial1::operator-() const {
    Polynomial1 out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) + b.at(i);
    return Polynomial1(std::move(c));
}

Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b) { return a + (-b); }

Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial1();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial1(std::move(c));
}

Polynomial1 operator*(const Scalar& s, const Polynomial1& p) {
    if (s.is_zero()) return Polynomial1();
    Polynomial1 out(p);
    for (auto& v : out.c_) v = s * v;
    out.trim();
    return out;
}

Polynomial1 Polynomial1::operator/(const Scalar& s) const { return s.inverse() * *this; }

bool operator==(const Polynomial1& a, const Polynomial1& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Scalar Polynomial1::evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial1 Polynomial1::derivative() const {
    if (c_.size() <= 1) return Polynomial1();
    std::vector<Scalar> d(c_.size() - 1, kZero);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    return Polynomial1(std::move(d));
}

Polynomial1 Polynomial1::compose(const Polynomial1& inner) const {
    Polynomial1 acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial1(*it);
    return acc;
}

std::pair<Polynomial1, Polynomial1> Polynomial1::divmod(const Polynomial1& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    Polynomial1 rem(*this);
    Polynomial1 quot;
    const long dd = divisor.degree();
    const Scalar lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        Scalar factor = rem.leading() * lead_inv;
        quot.set(shift, quot.at(shift) + factor);
        rem = rem - Polynomial1::monomial(shift, factor) * divisor;
    }
    return {quot, rem};
}

std::string Polynomial1::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (at(i).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << at(i).str() << ")";
        if (i > 0) os << "*" << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

Polynomial1 substitute_quadratic(const Polynomial1& p, QuadraticMap map) {
    if (map == QuadraticMap::x_to_x2) {
        Polynomial1 out;
        for (long i = 0; i <= p.degree(); ++i)
            if (!p.at(i).is_zero()) out.set(2 * i, p.at(i));
        return out;
    }
    Polynomial1 inner({Scalar(-1), Scalar(0), Scalar(2)});  // 2x^2 - 1
    return p.compose(inner);
}

EvenOddSplit even_odd_split(const Polynomial1& p) {
    bool has_even = false, has_odd = false;
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.at(i).is_zero()) continue;
        (i % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) throw MixedParityError("polynomial has mixed parity");
    if (has_odd) {
        Polynomial1 r;
        for (long i = 1; i <= p.degree(); i += 2) r.set((i - 1) / 2, p.at(i));
        return {Parity::odd, r};
    }
    Polynomial1 q;
    for (long i = 0; i <= p.degree(); i += 2) q.set(i / 2, p.at(i));
    return {Parity::even, q};
}

}  // namespace qaskey
