#include "heckeaf/exactnum/irreducibility.hpp"

#include "heckeaf/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace heckeaf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;  // lowest degree first, trimmed

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ModPoly reduce_mod(const IntPolynomial& f, u64 p) {
    ModPoly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        out.push_back(r.get_ui());
    }
    trim(out);
    return out;
}

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

// Returns (quotient, remainder); b must be non-zero.
std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, u64 p) {
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    u64 inv = invmod(b.back(), p);
    for (std::size_t d = a.size(); d-- >= b.size();) {
        u64 c = mulmod(a[d], inv, p);
        if (c == 0) {
            if (d == 0) break;
            continue;
        }
        std::size_t shift = d - (b.size() - 1);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mulmod(c, b[i], p)) % p;
        if (d == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

ModPoly derivative(const ModPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
    trim(d);
    return d;
}

ModPoly powmod_poly(ModPoly base, u64 e, const ModPoly& f, u64 p) {
    ModPoly r{1};
    base = divmod(base, f, p).second;
    while (e) {
        if (e & 1) r = divmod(mul(r, base, p), f, p).second;
        base = divmod(mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::set<int> subset_sums(const std::vector<int>& degrees) {
    std::set<int> sums{0};
    for (int d : degrees) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

Integer eval_at(const IntPolynomial& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool has_rational_root(const IntPolynomial& f) {
    const Integer& a0 = f.coeffs().front();
    const Integer& an = f.coeffs().back();
    if (a0 == 0) return true;
    if (abs(a0) > Integer("1000000000000") || abs(an) > Integer("1000000000000")) return false;
    const Polynomial fq = f.to_rational();
    for (const auto& p : positive_divisors(a0)) {
        for (const auto& q : positive_divisors(an)) {
            for (int s : {1, -1}) {
                if (fq.eval(Rational(p * s, q)) == 0) return true;
            }
        }
    }
    return false;
}

// Kronecker: search for an integer factor of exact degree d via Lagrange
// interpolation through d + 1 points.
bool has_factor_of_degree(const IntPolynomial& f, int d) {
    std::vector<Integer> xs;
    std::vector<Integer> vals;
    for (long t = 0; static_cast<int>(xs.size()) < d + 1; ++t) {
        for (long cand : {t, -t}) {
            if (static_cast<int>(xs.size()) == d + 1) break;
            if (t == 0 && cand != 0) continue;
            if (std::find(xs.begin(), xs.end(), Integer(cand)) != xs.end()) continue;
            Integer v = eval_at(f, Integer(cand));
            if (v == 0) return true;  // rational root: linear factor
            xs.emplace_back(cand);
            vals.push_back(v);
        }
    }
    std::vector<std::vector<Integer>> choices;
    for (const auto& v : vals) {
        std::vector<Integer> ds;
        for (const auto& dv : positive_divisors(v)) {
            ds.push_back(dv);
            ds.push_back(-dv);
        }
        choices.push_back(std::move(ds));
    }
    const Polynomial fq = f.to_rational();
    std::vector<Integer> pick(xs.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == xs.size()) {
            Polynomial g;
            for (std::size_t a = 0; a < xs.size(); ++a) {
                Polynomial basis = Polynomial::constant(pick[a]);
                for (std::size_t b = 0; b < xs.size(); ++b) {
                    if (a == b) continue;
                    Rational denom = Rational(xs[a] - xs[b]);
                    basis = basis * Polynomial({Rational(-xs[b]) / denom, Rational(1) / denom});
                }
                g = g + basis;
            }
            if (g.degree() != d) return false;
            for (const auto& c : g.coeffs()) {
                if (!is_integer(c)) return false;
            }
            return Polynomial::divmod(fq, g).second.is_zero();
        }
        for (const auto& c : choices[i]) {
            pick[i] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const IntPolynomial& p, std::uint64_t prime) {
    ModPoly f = reduce_mod(p, prime);
    if (static_cast<int>(f.size()) - 1 != p.degree()) return std::nullopt;
    if (gcd(f, derivative(f, prime), prime).size() != 1) return std::nullopt;
    {
        u64 inv = invmod(f.back(), prime);
        for (auto& c : f) c = mulmod(c, inv, prime);
    }
    std::vector<int> degrees;
    const ModPoly x{0, 1};
    ModPoly h = x;
    int d = 0;
    while (f.size() > 1) {
        ++d;
        if (2 * d > static_cast<int>(f.size()) - 1) {
            degrees.push_back(static_cast<int>(f.size()) - 1);
            break;
        }
        h = powmod_poly(h, prime, f, prime);
        ModPoly g = gcd(f, sub(h, x, prime), prime);
        if (g.size() > 1) {
            int k = static_cast<int>(g.size() - 1) / d;
            for (int i = 0; i < k; ++i) degrees.push_back(d);
            f = divmod(f, g, prime).first;
            h = divmod(h, f, prime).second;
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

bool is_irreducible(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (has_rational_root(p)) return false;
    if (n <= 3) return true;  // no linear factor means no factor at all
    if (!is_squarefree(p.to_rational())) return false;

    std::set<int> possible;
    for (int d = 1; d <= n / 2; ++d) possible.insert(d);
    int good_primes = 0;
    for (u64 q = 3; good_primes < 40 && q < 100000 && !possible.empty(); q += 2) {
        if (!is_prime(q)) continue;
        auto degs = factor_degrees_mod_p(p, q);
        if (!degs) continue;
        ++good_primes;
        auto sums = subset_sums(*degs);
        for (auto it = possible.begin(); it != possible.end();) {
            if (!sums.count(*it) && !sums.count(n - *it)) {
                it = possible.erase(it);
            } else {
                ++it;
            }
        }
    }
    if (possible.empty()) return true;
    if (n > 6) {
        throw Error(ErrorCode::PreconditionViolated,
                    "irreducibility of " + p.to_string() + " undecided by factor-degree patterns");
    }
    for (int d : possible) {
        if (has_factor_of_degree(p, d)) return false;
    }
    return true;
}

}  // namespace heckeaf
