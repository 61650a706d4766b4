#include "heckeaf/mcf/jpa.hpp"

#include <sstream>
#include <unordered_map>

namespace heckeaf {

IntMatrix jpa_block(const JpaDigit& b) {
    const std::size_t n = b.size() + 1;
    IntMatrix m(n, n);
    m(0, n - 1) = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (b[i - 1] < 0) throw Error(ErrorCode::PreconditionViolated, "JPA digits must be non-negative");
        m(i, i - 1) = 1;
        m(i, n - 1) += b[i - 1];
    }
    return m;
}

EuclidResult euclid_gcd(const Integer& a1, const Integer& a2) {
    if (a2 < 1 || a1 < a2) throw Error(ErrorCode::PreconditionViolated, "euclid_gcd needs a1 >= a2 >= 1");
    EuclidResult r;
    Integer a = a1;
    Integer b = a2;
    while (b != 0) {
        Integer q;
        Integer rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        r.quotients.push_back(q);
        a = b;
        b = rem;
    }
    r.gcd = a;
    return r;
}

std::vector<JpaDigit> JpaExpansion::digits() const {
    std::vector<JpaDigit> all = preperiod;
    all.insert(all.end(), period.begin(), period.end());
    return all;
}

std::size_t JpaState::hash() const noexcept {
    std::size_t seed = theta.size();
    for (const auto& t : theta) hash_combine(seed, t.hash());
    return seed;
}

JpaStepResult jpa_step(const JpaState& s, Embedding& e) {
    const std::size_t m = s.theta.size();
    if (m == 0) throw Error(ErrorCode::PreconditionViolated, "empty JPA state");
    const FieldPtr& field = s.theta.front().field();
    JpaStepResult r;
    r.digit.reserve(m);
    std::vector<FieldElement> frac;
    frac.reserve(m);
    for (const auto& t : s.theta) {
        Integer d = e.floor(t);
        frac.push_back(t - FieldElement::rational(field, Rational(d)));
        r.digit.push_back(std::move(d));
    }
    if (frac.front().is_zero()) return r;
    const FieldElement inv = frac.front().inverse();
    JpaState next;
    next.theta.reserve(m);
    for (std::size_t j = 1; j < m; ++j) next.theta.push_back(frac[j] * inv);
    next.theta.push_back(inv);
    r.next = std::move(next);
    return r;
}

namespace {

struct StateHash {
    std::size_t operator()(const JpaState& s) const noexcept { return s.hash(); }
};

std::size_t rational_rank_of(const std::vector<FieldElement>& theta) {
    const FieldPtr& field = theta.front().field();
    const auto n = static_cast<std::size_t>(field->degree());
    RatMatrix m(theta.size() + 1, n);
    m(0, 0) = 1;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i + 1, j) = theta[i].coords()[j];
    }
    return rank(m);
}

}  // namespace

JpaExpansion jpa_expand(const std::vector<FieldElement>& theta, Embedding& e, std::size_t max_steps) {
    if (theta.empty()) throw Error(ErrorCode::PreconditionViolated, "jpa_expand needs at least one coordinate");
    for (const auto& t : theta) {
        require_same_field(t, FieldElement::zero(e.field()));
        if (e.sign(t) <= 0) {
            throw Error(ErrorCode::PreconditionViolated, "JPA input " + t.to_string() + " is not positive");
        }
    }
    JpaExpansion x;
    x.dimension = theta.size() + 1;
    x.rational_rank = rational_rank_of(theta);

    std::unordered_map<JpaState, std::size_t, StateHash> seen;
    std::vector<JpaDigit> digits;
    JpaState state{theta};
    while (digits.size() < max_steps) {
        auto [it, inserted] = seen.emplace(state, digits.size());
        if (!inserted) {
            const auto start = static_cast<std::ptrdiff_t>(it->second);
            x.preperiod.assign(digits.begin(), digits.begin() + start);
            x.period.assign(digits.begin() + start, digits.end());
            x.steps = digits.size();
            return x;
        }
        JpaStepResult r = jpa_step(state, e);
        digits.push_back(std::move(r.digit));
        if (!r.next) {
            x.preperiod = std::move(digits);
            x.terminated = true;
            x.steps = x.preperiod.size();
            return x;
        }
        state = std::move(*r.next);
    }
    x.preperiod = std::move(digits);
    x.steps = x.preperiod.size();
    return x;
}

JpaExpansion regular_cf(const FieldElement& x, Embedding& e, std::size_t max_terms) {
    return jpa_expand({x}, e, max_terms);
}

JpaExpansion regular_cf(const Rational& x, std::size_t max_terms) {
    if (x <= 0) throw Error(ErrorCode::PreconditionViolated, "continued fraction input must be positive");
    JpaExpansion out;
    Rational t = x;
    while (out.preperiod.size() < max_terms) {
        Integer d = floor(t);
        out.preperiod.push_back({d});
        Rational f = t - d;
        if (f == 0) {
            out.terminated = true;
            break;
        }
        t = 1 / f;
    }
    out.steps = out.preperiod.size();
    return out;
}

IntMatrix convergent_matrix(const std::vector<JpaDigit>& digits, std::size_t n) {
    IntMatrix p = IntMatrix::identity(n);
    for (const auto& d : digits) {
        if (d.size() + 1 != n) throw Error(ErrorCode::ShapeMismatch, "digit length does not match dimension");
        p = p * jpa_block(d);
    }
    return p;
}

bool matches_period(const std::vector<JpaDigit>& period, const std::vector<JpaDigit>& digits) {
    const std::size_t p = period.size();
    if (p == 0 || digits.empty() || digits.size() % p != 0) return false;
    for (std::size_t r = 0; r < p; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < digits.size() && ok; ++i) ok = digits[i] == period[(i + r) % p];
        if (ok) return true;
    }
    return false;
}

std::string to_string(const JpaDigit& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i].get_str();
    os << ")";
    return os.str();
}

std::string to_string(const std::vector<JpaDigit>& ds) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? ", " : "") << to_string(ds[i]);
    os << "]";
    return os.str();
}

}  // namespace heckeaf
