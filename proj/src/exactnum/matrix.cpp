#include "heckeaf/exactnum/matrix.hpp"

#include <sstream>

namespace heckeaf {

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    }
    return r;
}

IntMatrix to_integer(const RatMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!is_integer(a(i, j))) throw Error(ErrorCode::PreconditionViolated, "matrix has non-integral entries");
            r(i, j) = a(i, j).get_num();
        }
    }
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void require_square(const auto& a, const char* what) {
    if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs a square matrix");
}

}  // namespace

Rational determinant(const RatMatrix& a) {
    require_square(a, "determinant");
    RatMatrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& a) {
    require_square(a, "determinant");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return rref(m).size();
}

RatMatrix inverse(const RatMatrix& a) {
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    Integer d = determinant(a);
    if (d != 1 && d != -1) throw Error(ErrorCode::PreconditionViolated, "matrix is not unimodular");
    return to_integer(inverse(to_rational(a)));
}

std::vector<Rational> solve_left(const RatMatrix& a, const std::vector<Rational>& b) {
    // x a = b  <=>  a^T x^T = b^T
    RatMatrix t = a.transpose();
    const std::size_t n = t.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = t(i, j);
        aug(i, n) = b.at(i);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::DivisionByZero, "singular system");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

std::vector<std::vector<Rational>> right_nullspace(const RatMatrix& a) {
    RatMatrix m = a;
    auto piv = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Polynomial characteristic_polynomial(const RatMatrix& a) {
    require_square(a, "characteristic polynomial");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix m(n, n);
    const RatMatrix id = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + scale(c[n - k + 1], id);
        c[n - k] = -trace(a * m) / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
    return IntPolynomial::from_rational(characteristic_polynomial(to_rational(a)));
}

bool is_nonnegative(const IntMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) < 0) return false;
        }
    }
    return true;
}

namespace {

template <class T>
std::string render(const Matrix<T>& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ", ";
            os << heckeaf::to_string(a(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& a) { return render(a); }
std::string to_string(const RatMatrix& a) { return render(a); }

}  // namespace heckeaf
