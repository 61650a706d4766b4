#include "heckeaf/exactnum/interval.hpp"

#include "heckeaf/error.hpp"

#include <algorithm>

namespace heckeaf {

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval operator*(const Rational& c, const RationalInterval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

RationalInterval eval_interval(const std::vector<Rational>& coeffs, const RationalInterval& x) {
    RationalInterval acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

namespace {

int sign_of(const Rational& v) { return sgn(v); }

}  // namespace

RealRootInterval RealRootInterval::bisect(const Polynomial& p) const {
    Rational mid = (lo + hi) / 2;
    Rational v = p.eval(mid);
    if (v == 0) {
        Rational quarter = (hi - lo) / 4;
        return {mid - quarter, mid + quarter};
    }
    if (sign_of(v) == sign_of(p.eval(lo))) return {mid, hi};
    return {lo, mid};
}

RealRootInterval RealRootInterval::refine(const Polynomial& p, const Rational& eps) const {
    if (eps <= 0) throw Error(ErrorCode::PreconditionViolated, "refinement width must be positive");
    RealRootInterval r = *this;
    while (r.width() >= eps) r = r.bisect(p);
    return r;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        auto r = Polynomial::divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(Rational(-1) * r);
    }
    return seq;
}

namespace {

int sign_variations(const std::vector<Polynomial>& sturm, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& s : sturm) {
        int v = sign_of(s.eval(x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

void isolate(const Polynomial& p, const std::vector<Polynomial>& sturm, const Rational& a,
             const Rational& b, std::vector<RealRootInterval>& out) {
    int n = count_real_roots(sturm, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    Rational mid = (a + b) / 2;
    if (p.eval(mid) != 0) {
        isolate(p, sturm, a, mid, out);
        isolate(p, sturm, mid, b, out);
        return;
    }
    Rational delta = (b - a) / 4;
    while (count_real_roots(sturm, mid - delta, mid + delta) != 1 || p.eval(mid - delta) == 0 ||
           p.eval(mid + delta) == 0) {
        delta /= 2;
    }
    isolate(p, sturm, a, mid - delta, out);
    out.push_back({mid - delta, mid + delta});
    isolate(p, sturm, mid + delta, b, out);
}

}  // namespace

int count_real_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b) {
    return sign_variations(sturm, a) - sign_variations(sturm, b);
}

std::vector<RealRootInterval> isolate_real_roots(const Polynomial& p) {
    if (p.degree() < 1) return {};
    if (!is_squarefree(p)) throw Error(ErrorCode::NotSquarefree, p.to_string());
    // Cauchy bound: every root satisfies |r| < 1 + max |a_i / a_n|.
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    Rational bound = Rational(ceil(m) + 1);
    std::vector<RealRootInterval> out;
    isolate(p, sturm_sequence(p), -bound, bound, out);
    return out;
}

}  // namespace heckeaf
