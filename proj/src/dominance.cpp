#include "qaskey/dominance.hpp"

#include <sstream>

#include "qaskey/hypergeometric.hpp"

namespace qaskey {

bool dominance_leq(const DominanceIndex& a, const DominanceIndex& b) {
    return a.m <= b.m && a.m + a.l <= b.m + b.l;
}

bool dominance_lt(const DominanceIndex& a, const DominanceIndex& b) {
    return dominance_leq(a, b) && a != b;
}

std::vector<DominanceIndex> downset(const DominanceIndex& top) {
    if (!top.valid()) throw Error("invalid dominance index");
    std::vector<DominanceIndex> out;
    for (long m = 0; m <= top.m; ++m)
        for (long l = 0; l <= m; ++l) {
            DominanceIndex idx{m, l};
            if (dominance_leq(idx, top)) out.push_back(idx);
        }
    std::sort(out.begin(), out.end(), [](const DominanceIndex& a, const DominanceIndex& b) {
        return TotalOrderLess{}(a, b);
    });
    return out;
}

Scalar DominancePoly2::at(const DominanceIndex& idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? Scalar(0) : it->second;
}

void DominancePoly2::set(const DominanceIndex& idx, const Scalar& v) {
    if (!idx.valid()) throw Error("invalid dominance index");
    if (v.is_zero())
        c_.erase(idx);
    else
        c_[idx] = v;
}

DominanceIndex DominancePoly2::leading_index() const {
    if (c_.empty()) throw Error("zero polynomial has no leading index");
    return c_.rbegin()->first;
}

const Scalar& DominancePoly2::leading_coeff() const {
    if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
    return c_.rbegin()->second;
}

bool DominancePoly2::is_monic() const { return !c_.empty() && leading_coeff().is_one(); }

bool DominancePoly2::support_dominated() const {
    if (c_.empty()) return true;
    DominanceIndex top = leading_index();
    for (const auto& [idx, v] : c_)
        if (!dominance_leq(idx, top)) return false;
    return true;
}

DominancePoly2 DominancePoly2::operator-() const {
    DominancePoly2 out(*this);
    for (auto& [idx, v] : out.c_) v = -v;
    return out;
}

DominancePoly2 operator+(const DominancePoly2& a, const DominancePoly2& b) {
    if (a.basis_ != b.basis_) throw Error("basis mismatch in DominancePoly2 addition");
    DominancePoly2 out(a);
    for (const auto& [idx, v] : b.c_) out.set(idx, out.at(idx) + v);
    return out;
}

DominancePoly2 operator-(const DominancePoly2& a, const DominancePoly2& b) { return a + (-b); }

DominancePoly2 operator*(const Scalar& s, const DominancePoly2& p) {
    DominancePoly2 out(p.basis_);
    if (s.is_zero()) return out;
    for (const auto& [idx, v] : p.c_) out.set(idx, s * v);
    return out;
}

DominancePoly2 DominancePoly2::operator/(const Scalar& s) const { return s.inverse() * *this; }

DominancePoly2 operator*(const DominancePoly2& a, const DominancePoly2& b) {
    if (a.basis_ != Basis2::monomial || b.basis_ != Basis2::monomial)
        throw Error("DominancePoly2 product requires the monomial basis");
    DominancePoly2 out(Basis2::monomial);
    for (const auto& [ia, va] : a.c_)
        for (const auto& [ib, vb] : b.c_) {
            DominanceIndex idx{ia.m + ib.m, ia.l + ib.l};
            out.set(idx, out.at(idx) + va * vb);
        }
    return out;
}

bool operator==(const DominancePoly2& a, const DominancePoly2& b) {
    if (a.basis_ != b.basis_ || a.c_.size() != b.c_.size()) return false;
    auto ita = a.c_.begin();
    auto itb = b.c_.begin();
    for (; ita != a.c_.end(); ++ita, ++itb)
        if (ita->first != itb->first || ita->second != itb->second) return false;
    return true;
}

Scalar DominancePoly2::evaluate(const Scalar& x, const Scalar& y) const {
    if (basis_ != Basis2::monomial) throw Error("evaluate requires the monomial basis");
    Scalar acc(0);
    for (const auto& [idx, v] : c_) acc += v * x.pow(idx.m - idx.l) * y.pow(idx.l);
    return acc;
}

DominancePoly2 DominancePoly2::compose(const DominancePoly2& u, const DominancePoly2& v) const {
    if (basis_ != Basis2::monomial) throw Error("compose requires the monomial basis");
    // Powers of u and v are memoized; indices stay small at desk scale.
    std::vector<DominancePoly2> upow{DominancePoly2::constant(Scalar(1))};
    std::vector<DominancePoly2> vpow{DominancePoly2::constant(Scalar(1))};
    auto power = [](std::vector<DominancePoly2>& tab, const DominancePoly2& base, long e) {
        while (static_cast<long>(tab.size()) <= e) tab.push_back(tab.back() * base);
        return tab[e];
    };
    DominancePoly2 out(Basis2::monomial);
    for (const auto& [idx, c] : c_) {
        DominancePoly2 term = c * (power(upow, u, idx.m - idx.l) * power(vpow, v, idx.l));
        out = out + term;
    }
    return out;
}

DominancePoly2 DominancePoly2::mono(long xexp, long yexp, const Scalar& coeff) {
    if (xexp < 0 || yexp < 0) throw Error("negative exponent");
    DominancePoly2 out(Basis2::monomial);
    out.set(DominanceIndex{xexp + yexp, yexp}, coeff);
    return out;
}

DominancePoly2 DominancePoly2::constant(const Scalar& v, Basis2 basis) {
    DominancePoly2 out(basis);
    out.set(DominanceIndex{0, 0}, v);
    return out;
}

std::string DominancePoly2::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    const char* tag = basis_ == Basis2::monomial ? "e" : (basis_ == Basis2::symmetric ? "s" : "w");
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")*" << tag << "[" << it->first.m << "," << it->first.l
           << "]";
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------- basis conversions

namespace {

// Pair-sum bookkeeping: PS(i, j) := x^i y^j + x^j y^i for any i, j >= 0
// (equal to twice the diagonal monomial when i = j). The symmetric basis
// element at (m, l) is PS(m, l) for m > l and PS(m, m)/2 for m = l.
void add_pair_sum(std::map<DominanceIndex, Scalar, TotalOrderLess>& acc, long i, long j,
                  const Scalar& v) {
    if (v.is_zero()) return;
    long m = std::max(i, j), l = std::min(i, j);
    DominanceIndex idx{m, l};
    Scalar w = (m == l) ? Scalar(2) * v : v;  // PS(m,m) = 2 x^m y^m
    auto it = acc.find(idx);
    Scalar next = (it == acc.end() ? Scalar(0) : it->second) + w;
    if (next.is_zero())
        acc.erase(idx);
    else
        acc[idx] = next;
}

}  // namespace

DominancePoly2 sympoly_from_elementary(const DominancePoly2& p) {
    if (p.basis() != Basis2::monomial)
        throw Error("sympoly_from_elementary expects a monomial-basis input");
    // xi^{m-l} eta^l = (x+y)^{m-l} (xy)^l = sum_i C(m-l, i) x^{m-i} y^{l+i}.
    std::map<DominanceIndex, Scalar, TotalOrderLess> acc;
    for (const auto& [idx, c] : p.coeffs()) {
        long a = idx.m - idx.l, l = idx.l;
        Scalar binom(1);
        for (long i = 0; 2 * i <= a; ++i) {
            // Pair x^{m-i} y^{l+i} with x^{l+i} y^{m-i}; the diagonal i = a/2
            // appears once in the binomial expansion.
            long e1 = idx.m - i, e2 = l + i;
            Scalar v = c * binom;
            if (e1 == e2)
                add_pair_sum(acc, e1, e2, v / Scalar(2));
            else
                add_pair_sum(acc, e1, e2, v);
            binom = binom * Scalar(a - i) / Scalar(i + 1);
        }
    }
    DominancePoly2 out(Basis2::symmetric);
    for (const auto& [idx, v] : acc) out.set(idx, v);
    return out;
}

DominancePoly2 elementary_from_sympoly(const DominancePoly2& p) {
    if (p.basis() != Basis2::symmetric)
        throw Error("elementary_from_sympoly expects a symmetric-basis input");
    // x^m y^l + x^l y^m = eta^l G_{m-l}(xi, eta) with
    //   G_0 = 2, G_1 = xi, G_j = xi G_{j-1} - eta G_{j-2}.
    // In the (xi, eta) monomial basis, index (m, l) means xi^{m-l} eta^l.
    DominancePoly2 out(Basis2::monomial);
    std::vector<DominancePoly2> g;
    g.push_back(DominancePoly2::constant(Scalar(2)));
    {
        DominancePoly2 g1(Basis2::monomial);
        g1.set(DominanceIndex{1, 0}, Scalar(1));
        g.push_back(g1);
    }
    long maxj = 0;
    for (const auto& [idx, c] : p.coeffs()) maxj = std::max(maxj, idx.m - idx.l);
    DominancePoly2 xi_poly(Basis2::monomial), eta_poly(Basis2::monomial);
    xi_poly.set(DominanceIndex{1, 0}, Scalar(1));
    eta_poly.set(DominanceIndex{1, 1}, Scalar(1));
    for (long j = 2; j <= maxj; ++j) g.push_back(xi_poly * g[j - 1] - eta_poly * g[j - 2]);

    for (const auto& [idx, c] : p.coeffs()) {
        long j = idx.m - idx.l;
        DominancePoly2 term = (j == 0 ? DominancePoly2::constant(c) : c * g[j]);
        // multiply by eta^l: shift (m', l') -> (m' + 2l ... in index terms
        // xi^{a} eta^{b} * eta^{l} = xi^{a} eta^{b+l}: index (a+b+l, b+l).
        DominancePoly2 shifted(Basis2::monomial);
        for (const auto& [i2, v2] : term.coeffs()) {
            long a = i2.m - i2.l, b = i2.l;
            shifted.set(DominanceIndex{a + b + idx.l, b + idx.l}, v2);
        }
        out = out + shifted;
    }
    return out;
}

std::vector<std::pair<long, long>> w2_orbit(const DominanceIndex& idx) {
    std::vector<std::pair<long, long>> out;
    auto push = [&](long a, long b) {
        for (const auto& e : out)
            if (e.first == a && e.second == b) return;
        out.emplace_back(a, b);
    };
    const long m = idx.m, l = idx.l;
    for (int sm : {1, -1})
        for (int sl : {1, -1}) {
            push(sm * m, sl * l);
            push(sl * l, sm * m);
        }
    return out;
}

std::map<std::pair<long, long>, Scalar> orbit_to_laurent(const DominancePoly2& p) {
    if (p.basis() != Basis2::orbit) throw Error("orbit_to_laurent expects the orbit basis");
    std::map<std::pair<long, long>, Scalar> out;
    for (const auto& [idx, c] : p.coeffs())
        for (const auto& e : w2_orbit(idx)) {
            auto it = out.find(e);
            Scalar next = (it == out.end() ? Scalar(0) : it->second) + c;
            if (next.is_zero())
                out.erase(e);
            else
                out[e] = next;
        }
    return out;
}

DominancePoly2 orbit_from_laurent(const std::map<std::pair<long, long>, Scalar>& f) {
    DominancePoly2 out(Basis2::orbit);
    for (const auto& [e, c] : f) {
        long a = std::abs(e.first), b = std::abs(e.second);
        DominanceIndex rep{std::max(a, b), std::min(a, b)};
        if (e.first == rep.m && e.second == rep.l) out.set(rep, c);
    }
    // Sanity: the input must be W2-invariant; spot-check mirrored entries.
    for (const auto& [idx, c] : out.coeffs()) {
        for (const auto& e : w2_orbit(idx)) {
            auto it = f.find(e);
            Scalar v = (it == f.end()) ? Scalar(0) : it->second;
            if (v != c) throw Error("Laurent expansion is not W2-invariant");
        }
    }
    return out;
}

DominancePoly2 laurent_from_symmetric(const DominancePoly2& p) {
    if (p.basis() != Basis2::symmetric)
        throw Error("laurent_from_symmetric expects a symmetric-basis input");
    // x = (z1 + 1/z1)/2, y = (z2 + 1/z2)/2. Expand each pair sum through
    // Chebyshev-free binomial expansions of x^m and y^l directly.
    std::map<std::pair<long, long>, Scalar> acc;
    auto add = [&](long e1, long e2, const Scalar& v) {
        if (v.is_zero()) return;
        auto key = std::make_pair(e1, e2);
        auto it = acc.find(key);
        Scalar next = (it == acc.end() ? Scalar(0) : it->second) + v;
        if (next.is_zero())
            acc.erase(key);
        else
            acc[key] = next;
    };
    // x^m = 2^{-m} sum_i C(m, i) z^{m-2i}
    auto expand_pow = [](long m) {
        std::vector<std::pair<long, Scalar>> terms;  // (exponent, coeff)
        Scalar scale = Scalar(2).pow(m).inverse();
        Scalar binom(1);
        for (long i = 0; i <= m; ++i) {
            terms.emplace_back(m - 2 * i, scale * binom);
            binom = binom * Scalar(m - i) / Scalar(i + 1);
        }
        return terms;
    };
    for (const auto& [idx, c] : p.coeffs()) {
        auto tm = expand_pow(idx.m);
        auto tl = expand_pow(idx.l);
        // x^m y^l (+ x^l y^m when m != l)
        for (const auto& [ea, va] : tm)
            for (const auto& [eb, vb] : tl) {
                add(ea, eb, c * va * vb);
                if (idx.m != idx.l) add(eb, ea, c * va * vb);
            }
    }
    return orbit_from_laurent(acc);
}

DominancePoly2 symmetric_from_laurent(const DominancePoly2& p) {
    if (p.basis() != Basis2::orbit) throw Error("symmetric_from_laurent expects the orbit basis");
    // With C_k(z) := z^k + z^{-k} = 2 T_k(x):
    //   orbit(m,l) = C_m(z1)C_l(z2) + C_l(z1)C_m(z2)   (m > l > 0)
    //   orbit(m,m) = C_m(z1)C_m(z2)
    //   orbit(m,0) = C_m(z1) + C_m(z2)
    //   orbit(0,0) = 1.
    auto cheb = [](long k) {  // T_k
        if (k == 0) return Polynomial1(Scalar(1));
        Polynomial1 tprev(Scalar(1)), t = Polynomial1::x();
        Polynomial1 two_x = Scalar(2) * Polynomial1::x();
        for (long j = 1; j < k; ++j) {
            Polynomial1 tnext = two_x * t - tprev;
            tprev = t;
            t = tnext;
        }
        return t;
    };
    std::map<DominanceIndex, Scalar, TotalOrderLess> acc;
    for (const auto& [idx, c] : p.coeffs()) {
        const long m = idx.m, l = idx.l;
        if (m == 0 && l == 0) {
            // orbit(0,0) = 1 = S_{(0,0)}; PS(0,0) counts it twice.
            add_pair_sum(acc, 0, 0, c / Scalar(2));
            continue;
        }
        if (l == 0) {
            // 2T_m(x) + 2T_m(y) = sum_i 2 a_i PS(i, 0)
            Polynomial1 t = cheb(m);
            for (long i = 0; i <= t.degree(); ++i)
                if (!t.at(i).is_zero()) add_pair_sum(acc, i, 0, Scalar(2) * c * t.at(i));
            continue;
        }
        if (m == l) {
            // 4 T_m(x)T_m(y) = 2 sum_{i,j} a_i a_j PS(i, j)
            Polynomial1 t = cheb(m);
            for (long i = 0; i <= t.degree(); ++i)
                for (long j = 0; j <= t.degree(); ++j)
                    add_pair_sum(acc, i, j, Scalar(2) * c * t.at(i) * t.at(j));
            continue;
        }
        // 4 [T_m(x)T_l(y) + T_l(x)T_m(y)] = 4 sum_{i,j} a_i b_j PS(i, j)
        Polynomial1 tm = cheb(m), tl = cheb(l);
        for (long i = 0; i <= tm.degree(); ++i)
            for (long j = 0; j <= tl.degree(); ++j)
                add_pair_sum(acc, i, j, Scalar(4) * c * tm.at(i) * tl.at(j));
    }
    DominancePoly2 out(Basis2::symmetric);
    for (const auto& [idx, v] : acc) out.set(idx, v);
    return out;
}

}  // namespace qaskey
