#pragma once

// Finite-codimension QQ[z]-submodules ("lattices") of QQ[z]^m and the chart
// combinatorics on them:
//
//  - Lattice: column span of a nonsingular polynomial matrix, canonicalized
//    by a column Hermite normal form (upper-triangular, monic pivots,
//    entries right of each pivot reduced modulo it). Membership, codimension
//    (three ways: det degree of the raw generators, pivot-degree sum, and
//    quotient dimension), the monomial quotient basis, the matrix of
//    multiplication by z on the quotient, and its characteristic polynomial.
//  - MVMatrix: the companion-block normal form parametrizing the chart X_mu.
//    Block (i,j) is mu_i x mu_j; diagonal blocks have 1s on the subdiagonal;
//    every block is free only in its last column, with rows < min(mu_i,
//    mu_j). Total free coordinates: sum_{i,j} min(mu_i, mu_j).
//  - mv_to_lattice / lattice_to_mv: mutually inverse chart maps. The
//    lattice of A has generators v_j = z^{mu_j} e_j - sum_i p_{ij}(z) e_i
//    where p_{ij} is read off block (i,j)'s last column; the inverse map is
//    the matrix of z on L_0/L in the designated basis
//    {e_1, ..., z^{mu_1 - 1} e_1, e_2, ...}, NotInChart when that set fails
//    to be a basis or the degree pattern is violated.
//  - in_X0: the open-stratum test. With k = codim(L) = qm + r, checks
//    L cap W_q = 0 and dim(L cap W_{q+1}) = m - r, where W_p is the span of
//    the z^t e_a with t < p and the intersection is the kernel of
//    W_p -> L_0/L (rational linear algebra: dim = mp - rank of the reduced
//    images).
//  - perp: the dual lattice under the standard coordinate pairing, a
//    QQ[z]-module of rational-function columns containing L_0, represented
//    as RatLattice (polynomial matrix over a single denominator) in a
//    canonical reduced form; an involution.
//
// ch is monic in the abstract variable of the characteristic polynomial;
// its coefficients are signed elementary symmetric functions of the z-action
// (coefficient of x^{k-i} is (-1)^i e_i). Under the loop grading z carries
// degree 2, so coefficient i sits in degree 2i; this is a documentation
// convention only, not tracked in the type.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhowe/errors.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/report.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

// Dense univariate polynomial over QQ, coefficients ascending, no trailing
// zeros (zero polynomial = empty coefficient list).
class QPoly {
  public:
    QPoly() = default;
    QPoly(long c) { // NOLINT: implicit by design, mirrors integer literals
        if (c != 0) c_.emplace_back(c);
    }
    explicit QPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly z(long e = 1) {
        if (e < 0) throw std::invalid_argument("QPoly::z: negative exponent");
        std::vector<Rat> c(static_cast<size_t>(e) + 1, Rat(0));
        c.back() = 1;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    // degree; -1 for the zero polynomial
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(long e) const {
        if (e < 0 || static_cast<size_t>(e) >= c_.size()) return Rat(0);
        return c_[static_cast<size_t>(e)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    QPoly& operator+=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    QPoly operator-() const {
        QPoly r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(r));
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly& scale(const Rat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (Rat& x : c_) x *= s;
        return *this;
    }
    QPoly monic() const {
        if (is_zero()) throw Singular("QPoly::monic: zero polynomial");
        QPoly r = *this;
        const Rat inv = Rat(1) / leading();
        for (Rat& x : r.c_) x *= inv;
        return r;
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw Singular("QPoly::divmod: division by zero");
        QPoly rem = *this;
        QPoly quot;
        const long dd = d.deg();
        if (rem.deg() >= dd) quot.c_.assign(static_cast<size_t>(rem.deg() - dd) + 1, Rat(0));
        while (!rem.is_zero() && rem.deg() >= dd) {
            const long e = rem.deg() - dd;
            const Rat f = rem.leading() / d.leading();
            quot.c_[static_cast<size_t>(e)] = f;
            for (long i = 0; i <= dd; ++i) rem.c_[static_cast<size_t>(e + i)] -= f * d.c_[static_cast<size_t>(i)];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }
    QPoly div_exact(const QPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw NotDivisible("QPoly: inexact division");
        return q;
    }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (size_t e = 0; e < c_.size(); ++e) {
            if (c_[e] == 0) continue;
            if (!first) out << " + ";
            first = false;
            out << c_[e].get_str();
            if (e == 1)
                out << "*z";
            else if (e >= 2)
                out << "*z^" << e;
        }
        return out.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

// columns are the generators / module elements
using PolyMatrix = std::vector<std::vector<QPoly>>;
using PolyVec = std::vector<QPoly>;

inline std::string poly_vec_str(const PolyVec& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].str();
    }
    out << "]";
    return out.str();
}

inline std::string poly_matrix_str(const PolyMatrix& a) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out << ", ";
        out << poly_vec_str(a[i]);
    }
    out << "]";
    return out.str();
}

namespace detail {

inline PolyMatrix poly_identity(size_t m) {
    PolyMatrix r(m, PolyVec(m, QPoly()));
    for (size_t i = 0; i < m; ++i) r[i][i] = QPoly(1);
    return r;
}

// column c_j -= f * c_t  (columns live inside the row-major matrix)
inline void col_axpy(PolyMatrix& a, size_t j, const QPoly& f, size_t t) {
    if (f.is_zero()) return;
    for (auto& row : a) row[j] -= f * row[t];
}

} // namespace detail

// Fraction-free determinant (Bareiss). Works on any square matrix over QQ[z];
// the interior divisions are exact by the Sylvester identity.
inline QPoly det_poly(PolyMatrix a) {
    const size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != m) throw std::invalid_argument("det_poly: non-square matrix");
    if (m == 0) return QPoly(1);
    QPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < m && a[piv][k].is_zero()) ++piv;
            if (piv == m) return QPoly();
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i)
            for (size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).div_exact(prev);
        prev = a[k][k];
    }
    QPoly d = a[m - 1][m - 1];
    if (sign < 0) d = -d;
    return d;
}

// Column Hermite normal form of a square nonsingular matrix: upper
// triangular, monic pivots on the diagonal, and each entry right of a pivot
// reduced modulo it (degree strictly below the pivot's). Canonical for the
// column span. Singular if the columns do not have full rank.
inline PolyMatrix hnf(const PolyMatrix& gens) {
    const size_t m = gens.size();
    for (const auto& row : gens)
        if (row.size() != m) throw std::invalid_argument("hnf: non-square matrix");
    PolyMatrix a = gens;
    std::vector<size_t> pivot(m, 0);
    std::vector<bool> used(m, false);

    for (size_t r = m; r-- > 0;) {
        // Euclid across the still-active columns until one column carries row r
        while (true) {
            size_t best = m;
            long best_deg = 0;
            size_t nonzero = 0;
            for (size_t j = 0; j < m; ++j) {
                if (used[j] || a[r][j].is_zero()) continue;
                ++nonzero;
                if (best == m || a[r][j].deg() < best_deg) {
                    best = j;
                    best_deg = a[r][j].deg();
                }
            }
            if (nonzero == 0) throw Singular("hnf: rank-deficient generators");
            if (nonzero == 1) {
                pivot[r] = best;
                used[best] = true;
                break;
            }
            for (size_t j = 0; j < m; ++j) {
                if (used[j] || j == best || a[r][j].is_zero()) continue;
                detail::col_axpy(a, j, a[r][j].divmod(a[r][best]).first, best);
            }
        }
        // monic pivot
        const Rat lead = a[r][pivot[r]].leading();
        if (lead != 1)
            for (size_t i = 0; i <= r; ++i) a[i][pivot[r]].scale(Rat(1) / lead);
    }

    PolyMatrix h(m, PolyVec(m, QPoly()));
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i < m; ++i) h[i][r] = a[i][pivot[r]];
    // reduce the entries right of each pivot, bottom-up within each column so
    // later reductions cannot disturb finished rows
    for (size_t j = 0; j < m; ++j)
        for (size_t r = j; r-- > 0;) {
            const QPoly q = h[r][j].divmod(h[r][r]).first;
            if (!q.is_zero())
                for (size_t i = 0; i <= r; ++i) h[i][j] -= q * h[i][r];
        }
    return h;
}

struct QuotientAction {
    // quotient basis: (coordinate a, power t) meaning z^t e_a, grouped by
    // coordinate, powers ascending
    std::vector<std::pair<int, long>> basis;
    std::vector<std::vector<Rat>> z_mat; // column j = image of basis[j]
};

// characteristic polynomial of a square rational matrix, monic in x,
// by the trace recursion (exact over QQ)
inline QPoly charpoly(const std::vector<std::vector<Rat>>& a) {
    const size_t d = a.size();
    for (const auto& row : a)
        if (row.size() != d) throw std::invalid_argument("charpoly: non-square matrix");
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = 1; // coefficient of x^d
    if (d == 0) return QPoly(std::vector<Rat>{Rat(1)});
    std::vector<std::vector<Rat>> M = a;
    for (size_t k = 1; k <= d; ++k) {
        if (k > 1) {
            // M <- A * (M + c_{k-1} I)
            std::vector<std::vector<Rat>> S = M;
            for (size_t i = 0; i < d; ++i) S[i][i] += c[d - (k - 1)];
            std::vector<std::vector<Rat>> R(d, std::vector<Rat>(d, Rat(0)));
            for (size_t i = 0; i < d; ++i)
                for (size_t t = 0; t < d; ++t) {
                    if (a[i][t] == 0) continue;
                    for (size_t j = 0; j < d; ++j) R[i][j] += a[i][t] * S[t][j];
                }
            M = std::move(R);
        }
        Rat tr(0);
        for (size_t i = 0; i < d; ++i) tr += M[i][i];
        c[d - k] = -tr / Rat(static_cast<long>(k));
    }
    return QPoly(std::move(c));
}

class Lattice {
  public:
    explicit Lattice(const PolyMatrix& gens) : raw_(gens), hnf_(hnf(gens)) {}
    static Lattice standard(size_t m) { return Lattice(detail::poly_identity(m)); }

    size_t m() const { return hnf_.size(); }
    const PolyMatrix& gens() const { return hnf_; }
    const PolyMatrix& raw_gens() const { return raw_; }

    bool operator==(const Lattice& o) const { return hnf_ == o.hnf_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    // canonical representative of v modulo the lattice: bottom-up division
    // against the triangular generators; the remainder has entry degrees
    // strictly below the pivot degrees
    PolyVec reduce(const PolyVec& v) const {
        if (v.size() != m()) throw std::invalid_argument("Lattice::reduce: length mismatch");
        PolyVec r = v;
        for (size_t row = m(); row-- > 0;) {
            const QPoly q = r[row].divmod(hnf_[row][row]).first;
            if (!q.is_zero())
                for (size_t i = 0; i <= row; ++i) r[i] -= q * hnf_[i][row];
        }
        return r;
    }
    bool member(const PolyVec& v) const {
        for (const QPoly& x : reduce(v))
            if (!x.is_zero()) return false;
        return true;
    }

    // codimension as the pivot-degree sum of the canonical generators
    long codim() const {
        long s = 0;
        for (size_t i = 0; i < m(); ++i) s += hnf_[i][i].deg();
        return s;
    }
    // independent recomputation from the raw generators
    long codim_via_det() const {
        const QPoly d = det_poly(raw_);
        if (d.is_zero()) throw Singular("codim_via_det: singular generators");
        return d.deg();
    }

    QuotientAction quotient_action() const {
        QuotientAction qa;
        for (size_t a = 0; a < m(); ++a)
            for (long t = 0; t < hnf_[a][a].deg(); ++t) qa.basis.emplace_back(static_cast<int>(a), t);
        const size_t d = qa.basis.size();
        qa.z_mat.assign(d, std::vector<Rat>(d, Rat(0)));
        for (size_t j = 0; j < d; ++j) {
            auto [a, t] = qa.basis[j];
            PolyVec v(m(), QPoly());
            v[static_cast<size_t>(a)] = QPoly::z(t + 1);
            PolyVec red = reduce(v);
            for (size_t row = 0; row < d; ++row) {
                auto [b, s] = qa.basis[row];
                qa.z_mat[row][j] = red[static_cast<size_t>(b)].coeff(s);
            }
        }
        return qa;
    }

    // characteristic polynomial of z on L_0/L (monic, degree = codim)
    QPoly ch() const { return charpoly(quotient_action().z_mat); }

    // coordinates of v's residue class in the quotient basis
    std::vector<Rat> quotient_coords(const QuotientAction& qa, const PolyVec& v) const {
        PolyVec red = reduce(v);
        std::vector<Rat> out(qa.basis.size(), Rat(0));
        for (size_t col = 0; col < qa.basis.size(); ++col) {
            auto [b, s] = qa.basis[col];
            out[col] = red[static_cast<size_t>(b)].coeff(s);
        }
        return out;
    }

  private:
    PolyMatrix raw_;
    PolyMatrix hnf_;
};

namespace detail {

// rank over QQ by Gaussian elimination; rows is a list of equal-length vectors
inline size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    size_t rank = 0;
    const size_t width = rows.empty() ? 0 : rows[0].size();
    size_t col = 0;
    while (rank < rows.size() && col < width) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        const Rat inv = Rat(1) / rows[rank][col];
        for (size_t j = col; j < width; ++j) rows[rank][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (size_t j = col; j < width; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

// Solve square S x = y over QQ; Singular if S is singular.
inline std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> S, std::vector<Rat> y) {
    const size_t d = S.size();
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && S[piv][col] == 0) ++piv;
        if (piv == d) throw Singular("solve_rational: singular system");
        std::swap(S[piv], S[col]);
        std::swap(y[piv], y[col]);
        const Rat inv = Rat(1) / S[col][col];
        for (size_t j = col; j < d; ++j) S[col][j] *= inv;
        y[col] *= inv;
        for (size_t i = 0; i < d; ++i) {
            if (i == col || S[i][col] == 0) continue;
            const Rat f = S[i][col];
            for (size_t j = col; j < d; ++j) S[i][j] -= f * S[col][j];
            y[i] -= f * y[col];
        }
    }
    return y;
}

} // namespace detail

// dim(L cap W_p) where W_p = span{z^t e_a : t < p}: the kernel dimension of
// the evaluation W_p -> L_0/L
inline long dim_meet_W(const Lattice& L, long p) {
    if (p < 0) throw std::invalid_argument("dim_meet_W: p >= 0 required");
    const QuotientAction qa = L.quotient_action();
    std::vector<std::vector<Rat>> rows;
    for (size_t a = 0; a < L.m(); ++a)
        for (long t = 0; t < p; ++t) {
            PolyVec v(L.m(), QPoly());
            v[a] = QPoly::z(t);
            rows.push_back(L.quotient_coords(qa, v));
        }
    const long total = static_cast<long>(L.m()) * p;
    return total - static_cast<long>(detail::rational_rank(std::move(rows)));
}

// Open-stratum membership: with k = qm + r (0 <= r < m), L lies in the open
// stratum iff L cap W_q = 0 and dim(L cap W_{q+1}) = m - r.
inline bool in_X0(long k, const Lattice& L) {
    if (L.codim() != k) throw std::invalid_argument("in_X0: codim(L) != k");
    const long m = static_cast<long>(L.m());
    const long q = k / m;
    const long r = k % m;
    return dim_meet_W(L, q) == 0 && dim_meet_W(L, q + 1) == m - r;
}

// ---------------------------------------------------------------------------
// MVMatrix: the companion-block chart coordinates.
// ---------------------------------------------------------------------------

struct MVMatrix {
    std::vector<long> mu;
    // p[i][j]: the polynomial whose coefficients fill the last column of
    // block (i,j); deg p[i][j] < min(mu_i, mu_j)
    std::vector<std::vector<QPoly>> p;

    size_t blocks() const { return mu.size(); }
    long total() const {
        long s = 0;
        for (long x : mu) s += x;
        return s;
    }

    static long free_count(const std::vector<long>& mu) {
        long s = 0;
        for (long a : mu)
            for (long b : mu) s += std::min(a, b);
        return s;
    }

    void validate() const {
        if (mu.empty()) throw std::invalid_argument("MVMatrix: empty composition");
        for (long x : mu)
            if (x < 0) throw std::invalid_argument("MVMatrix: negative part");
        if (p.size() != mu.size()) throw std::invalid_argument("MVMatrix: block row count mismatch");
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].size() != mu.size())
                throw std::invalid_argument("MVMatrix: block column count mismatch");
            for (size_t j = 0; j < p[i].size(); ++j)
                if (p[i][j].deg() >= std::min(mu[i], mu[j]))
                    throw std::invalid_argument("MVMatrix: block (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") exceeds the degree pattern");
        }
    }

    // free coordinates in row-major block order; within a block, the last
    // column top-down (= coefficients of p[i][j], ascending)
    std::vector<Rat> free_entries() const {
        std::vector<Rat> out;
        for (size_t i = 0; i < mu.size(); ++i)
            for (size_t j = 0; j < mu.size(); ++j)
                for (long t = 0; t < std::min(mu[i], mu[j]); ++t) out.push_back(p[i][j].coeff(t));
        return out;
    }
    static MVMatrix from_free(const std::vector<long>& mu, const std::vector<Rat>& entries) {
        if (static_cast<long>(entries.size()) != free_count(mu))
            throw std::invalid_argument("MVMatrix: wrong number of free entries");
        MVMatrix a;
        a.mu = mu;
        a.p.assign(mu.size(), std::vector<QPoly>(mu.size(), QPoly()));
        size_t idx = 0;
        for (size_t i = 0; i < mu.size(); ++i)
            for (size_t j = 0; j < mu.size(); ++j) {
                std::vector<Rat> c;
                for (long t = 0; t < std::min(mu[i], mu[j]); ++t) c.push_back(entries[idx++]);
                a.p[i][j] = QPoly(std::move(c));
            }
        a.validate();
        return a;
    }

    // the full k x k scalar matrix (k = total()): subdiagonal 1s in the
    // diagonal blocks, free entries in last columns
    std::vector<std::vector<Rat>> matrix() const {
        validate();
        const size_t k = static_cast<size_t>(total());
        std::vector<size_t> offset(mu.size() + 1, 0);
        for (size_t a = 0; a < mu.size(); ++a) offset[a + 1] = offset[a] + static_cast<size_t>(mu[a]);
        std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, Rat(0)));
        for (size_t j = 0; j < mu.size(); ++j) {
            for (long t = 0; t + 1 < mu[j]; ++t)
                M[offset[j] + static_cast<size_t>(t) + 1][offset[j] + static_cast<size_t>(t)] = 1;
            if (mu[j] == 0) continue;
            const size_t last = offset[j] + static_cast<size_t>(mu[j]) - 1;
            for (size_t i = 0; i < mu.size(); ++i)
                for (long t = 0; t < std::min(mu[i], mu[j]); ++t)
                    M[offset[i] + static_cast<size_t>(t)][last] = p[i][j].coeff(t);
        }
        return M;
    }

    bool operator==(const MVMatrix& o) const { return mu == o.mu && p == o.p; }
    bool operator!=(const MVMatrix& o) const { return !(*this == o); }

    // (mu, free entries in row-major block order)
    std::string str() const {
        std::ostringstream out;
        out << "(" << weight_str(mu) << ", [";
        const std::vector<Rat> e = free_entries();
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ",";
            out << e[i].get_str();
        }
        out << "])";
        return out.str();
    }
};

// generators v_j = z^{mu_j} e_j - sum_i p_{ij}(z) e_i
inline Lattice mv_to_lattice(const MVMatrix& a) {
    a.validate();
    const size_t m = a.mu.size();
    PolyMatrix g(m, PolyVec(m, QPoly()));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) {
            g[i][j] = -a.p[i][j];
            if (i == j) g[i][j] += QPoly::z(a.mu[j]);
        }
    return Lattice(g);
}

namespace detail {

struct ChartData {
    bool ok = false;
    std::string why;
    MVMatrix a;
};

inline ChartData chart_extract(const std::vector<long>& mu, const Lattice& L) {
    ChartData out;
    if (mu.size() != L.m()) {
        out.why = "composition length != lattice rank";
        return out;
    }
    long total = 0;
    for (long x : mu) {
        if (x < 0) {
            out.why = "negative composition part";
            return out;
        }
        total += x;
    }
    if (L.codim() != total) {
        out.why = "codim(L) != |mu|";
        return out;
    }
    const QuotientAction qa = L.quotient_action();
    const size_t k = qa.basis.size();

    // designated monomial classes z^t e_a, t < mu_a, in block order
    std::vector<std::pair<int, long>> desig;
    for (size_t a = 0; a < mu.size(); ++a)
        for (long t = 0; t < mu[a]; ++t) desig.emplace_back(static_cast<int>(a), t);

    // P: columns = designated classes in the HNF quotient basis
    std::vector<std::vector<Rat>> P(k, std::vector<Rat>(k, Rat(0)));
    for (size_t j = 0; j < desig.size(); ++j) {
        PolyVec v(L.m(), QPoly());
        v[static_cast<size_t>(desig[j].first)] = QPoly::z(desig[j].second);
        const std::vector<Rat> coords = L.quotient_coords(qa, v);
        for (size_t i = 0; i < k; ++i) P[i][j] = coords[i];
    }

    MVMatrix a;
    a.mu = mu;
    a.p.assign(mu.size(), std::vector<QPoly>(mu.size(), QPoly()));
    for (size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] == 0) continue;
        PolyVec v(L.m(), QPoly());
        v[j] = QPoly::z(mu[j]);
        const std::vector<Rat> y = L.quotient_coords(qa, v);
        std::vector<Rat> x;
        try {
            x = solve_rational(P, y);
        } catch (const Singular&) {
            out.why = "designated classes do not form a quotient basis";
            return out;
        }
        // x expresses z^{mu_j} e_j over the designated classes; the chart
        // demands support within the degree pattern
        std::vector<std::vector<Rat>> coeff(mu.size());
        for (size_t t = 0; t < desig.size(); ++t)
            coeff[static_cast<size_t>(desig[t].first)].push_back(x[t]);
        for (size_t i = 0; i < mu.size(); ++i) {
            for (long t = std::min(mu[i], mu[j]); t < static_cast<long>(coeff[i].size()); ++t)
                if (coeff[i][static_cast<size_t>(t)] != 0) {
                    out.why = "degree pattern violated at block (" + std::to_string(i) + "," +
                              std::to_string(j) + ")";
                    return out;
                }
            coeff[i].resize(static_cast<size_t>(std::min(mu[i], mu[j])), Rat(0));
            a.p[i][j] = QPoly(std::move(coeff[i]));
        }
    }
    out.ok = true;
    out.a = std::move(a);
    return out;
}

} // namespace detail

inline bool in_X_mu(const std::vector<long>& mu, const Lattice& L) {
    return detail::chart_extract(mu, L).ok;
}

inline MVMatrix lattice_to_mv(const std::vector<long>& mu, const Lattice& L) {
    detail::ChartData d = detail::chart_extract(mu, L);
    if (!d.ok) throw NotInChart("lattice_to_mv: " + d.why);
    return d.a;
}

// ---------------------------------------------------------------------------
// Duality: perp(L) = { v in QQ(z)^m : <v, w> in QQ[z] for all w in L }.
// ---------------------------------------------------------------------------

// adjugate via cofactors (desk-scale matrices)
inline PolyMatrix adjugate(const PolyMatrix& a) {
    const size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != m) throw std::invalid_argument("adjugate: non-square matrix");
    PolyMatrix adj(m, PolyVec(m, QPoly()));
    if (m == 0) return adj;
    if (m == 1) {
        adj[0][0] = QPoly(1);
        return adj;
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            PolyMatrix minor;
            minor.reserve(m - 1);
            for (size_t r = 0; r < m; ++r) {
                if (r == j) continue; // adj_{ij} = cofactor_{ji}
                PolyVec row;
                row.reserve(m - 1);
                for (size_t c = 0; c < m; ++c) {
                    if (c == i) continue;
                    row.push_back(a[r][c]);
                }
                minor.push_back(std::move(row));
            }
            QPoly d = det_poly(minor);
            if ((i + j) % 2 == 1) d = -d;
            adj[i][j] = std::move(d);
        }
    return adj;
}

// A QQ[z]-submodule of QQ(z)^m with a single polynomial denominator: the
// column span of num/den. Canonical form: den monic, gcd(den, content(num))
// = 1, num in HNF.
struct RatLattice {
    PolyMatrix num;
    QPoly den = QPoly(1);

    void canonicalize() {
        QPoly g = den;
        for (const auto& row : num)
            for (const QPoly& x : row) g = gcd(g, x);
        if (!g.is_one() && !g.is_zero()) {
            den = den.div_exact(g);
            for (auto& row : num)
                for (QPoly& x : row) x = x.div_exact(g);
        }
        const Rat lead = den.leading();
        if (lead != 1) {
            den.scale(Rat(1) / lead);
            for (auto& row : num)
                for (QPoly& x : row) x.scale(Rat(1) / lead);
        }
        num = hnf(num);
    }

    bool operator==(const RatLattice& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatLattice& o) const { return !(*this == o); }

    std::string str() const { return "(1/(" + den.str() + ")) * " + poly_matrix_str(num); }
};

inline RatLattice embed(const Lattice& L) {
    RatLattice r{L.gens(), QPoly(1)};
    r.canonicalize();
    return r;
}

// inverse-transpose of the generators under the standard coordinate pairing
inline RatLattice perp(const Lattice& L) {
    const PolyMatrix& g = L.gens();
    const QPoly d = det_poly(g);
    if (d.is_zero()) throw Singular("perp: singular generators");
    const PolyMatrix adj = adjugate(g);
    const size_t m = g.size();
    PolyMatrix n(m, PolyVec(m, QPoly()));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) n[i][j] = adj[j][i];
    RatLattice r{std::move(n), d};
    r.canonicalize();
    return r;
}

inline RatLattice perp(const RatLattice& L) {
    const QPoly d = det_poly(L.num);
    if (d.is_zero()) throw Singular("perp: singular generators");
    const PolyMatrix adj = adjugate(L.num);
    const size_t m = L.num.size();
    PolyMatrix n(m, PolyVec(m, QPoly()));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) n[i][j] = L.den * adj[j][i];
    RatLattice r{std::move(n), d};
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Flags of lattices with prescribed codimension steps.
// ---------------------------------------------------------------------------

using LatticeFlag = std::vector<Lattice>;

// chain[0] >= chain[1] >= ... with codim(chain[i+1]) - codim(chain[i]) = k[i]
inline bool validate_flag(const LatticeFlag& chain, const Weight& k) {
    if (chain.empty()) return k.empty();
    for (const Lattice& L : chain)
        if (L.m() != chain[0].m()) throw std::invalid_argument("validate_flag: rank mismatch");
    if (k.size() != chain.size() - 1) return false;
    for (size_t s = 0; s + 1 < chain.size(); ++s) {
        const Lattice& outer = chain[s];
        const Lattice& inner = chain[s + 1];
        for (size_t j = 0; j < inner.m(); ++j) {
            PolyVec col(inner.m());
            for (size_t i = 0; i < inner.m(); ++i) col[i] = inner.gens()[i][j];
            if (!outer.member(col)) return false;
        }
        if (inner.codim() - outer.codim() != k[s]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Property suite over seeded random chart coordinates.
// ---------------------------------------------------------------------------

struct MVCheckParams {
    int m_max = 3;
    long mu_max = 5;
    int samples = 20;      // random matrices per composition
    int perp_samples = 10; // random lattices for the duality involution
    std::uint64_t seed = 12345;
};

namespace detail {

// deterministic rational stream: numerators in [-3,3], denominators in [1,3]
struct RatStream {
    std::mt19937_64 rng;
    explicit RatStream(std::uint64_t seed) : rng(seed) {}
    Rat next() {
        std::uniform_int_distribution<long> num(-3, 3);
        std::uniform_int_distribution<long> den(1, 3);
        Rat r(num(rng), den(rng));
        r.canonicalize();
        return r;
    }
};

inline std::vector<std::vector<long>> compositions(int m, long total_max) {
    std::vector<std::vector<long>> out;
    for (long t = 0; t <= total_max; ++t)
        for (const Weight& w : qhowe::weights_with_sum(m, t)) out.emplace_back(w.begin(), w.end());
    return out;
}

inline bool balanced(const std::vector<long>& mu) {
    long total = 0;
    for (long x : mu) total += x;
    const long m = static_cast<long>(mu.size());
    const long q = total / m;
    const long r = total % m;
    long at_q = 0, at_q1 = 0;
    for (long x : mu) {
        if (x == q)
            ++at_q;
        else if (x == q + 1)
            ++at_q1;
        else
            return false;
    }
    // when r = 0 every part is q
    return at_q == m - r && at_q1 == r;
}

} // namespace detail

inline Report check_mv(const MVCheckParams& p) {
    Report rep;
    rep.suite = "mv";
    rep.param("m_max", std::to_string(p.m_max));
    rep.param("mu_max", std::to_string(p.mu_max));
    rep.param("samples", std::to_string(p.samples));
    rep.param("perp_samples", std::to_string(p.perp_samples));
    rep.param("seed", std::to_string(p.seed));

    std::uint64_t stream_index = 0;
    for (int m = 1; m <= p.m_max; ++m) {
        for (const std::vector<long>& mu : detail::compositions(m, p.mu_max)) {
            ++stream_index;
            detail::RatStream rs(p.seed ^ (0x9e3779b97f4a7c15ULL * stream_index));
            std::string mu_str = weight_str(mu);
            const long fc = MVMatrix::free_count(mu);

            // torus-fixed lattice: zero free entries; in the chart, and in
            // the open stratum exactly for balanced mu
            {
                MVMatrix a0 = MVMatrix::from_free(mu, std::vector<Rat>(static_cast<size_t>(fc)));
                Lattice L0 = mv_to_lattice(a0);
                bool ok = in_X_mu(mu, L0) && lattice_to_mv(mu, L0) == a0;
                rep.add("fixed point in chart " + mu_str, ok);
                const bool open_got = in_X0(L0.codim(), L0);
                const bool open_want = detail::balanced(mu);
                rep.add("fixed point open stratum " + mu_str, open_got == open_want,
                        open_got == open_want
                            ? ""
                            : "in_X0 = " + std::string(open_got ? "true" : "false") +
                                  ", balanced = " + std::string(open_want ? "true" : "false"));
            }

            bool ok_rt = true, ok_ch = true, ok_codim = true, ok_chart = true, ok_free = true;
            bool ok_meet = true;
            std::string why_rt, why_ch, why_codim, why_chart, why_meet;
            for (int s = 0; s < p.samples; ++s) {
                std::vector<Rat> entries(static_cast<size_t>(fc));
                for (Rat& x : entries) x = rs.next();
                MVMatrix a = MVMatrix::from_free(mu, entries);
                if (a.free_entries() != entries) ok_free = false;
                Lattice L = mv_to_lattice(a);
                if (!in_X_mu(mu, L)) {
                    ok_chart = false;
                    why_chart = "sample " + std::to_string(s) + " not in chart";
                }
                try {
                    MVMatrix back = lattice_to_mv(mu, L);
                    if (!(back == a)) {
                        ok_rt = false;
                        why_rt = "sample " + std::to_string(s) + ": got " + back.str() + ", want " +
                                 a.str();
                    }
                } catch (const NotInChart& e) {
                    ok_rt = false;
                    why_rt = "sample " + std::to_string(s) + ": " + e.what();
                }
                const QPoly chL = L.ch();
                const QPoly chA = charpoly(a.matrix());
                const QPoly chDet = det_poly(L.raw_gens()).monic();
                if (!(chL == chA && chL == chDet)) {
                    ok_ch = false;
                    why_ch = "sample " + std::to_string(s) + ": quotient " + chL.str() +
                             ", matrix " + chA.str() + ", det " + chDet.str();
                }
                if (L.codim() != a.total() || L.codim_via_det() != a.total()) {
                    ok_codim = false;
                    why_codim = "sample " + std::to_string(s);
                }
                // dim(L cap W_p): nondecreasing in p and >= mp - codim
                const long k = a.total();
                const long mm = static_cast<long>(mu.size());
                long prev = 0;
                for (long pp = 0; pp <= k / mm + 2; ++pp) {
                    const long got = dim_meet_W(L, pp);
                    if (got < prev || got < mm * pp - k) {
                        ok_meet = false;
                        why_meet = "sample " + std::to_string(s) + " p=" + std::to_string(pp);
                    }
                    prev = got;
                }
            }
            rep.add("round trip " + mu_str, ok_rt, why_rt);
            rep.add("ch three ways " + mu_str, ok_ch, why_ch);
            rep.add("codim two ways " + mu_str, ok_codim, why_codim);
            rep.add("chart membership " + mu_str, ok_chart, why_chart);
            rep.add("free coordinates " + mu_str, ok_free,
                    ok_free ? "" : "free-entry round trip failed");
            rep.add("W_p intersection bounds " + mu_str, ok_meet, why_meet);
        }
    }

    // duality involution on seeded lattices, cycling over ranks
    {
        bool ok = true;
        std::string why;
        detail::RatStream rs(p.seed ^ 0xabcdef1234567890ULL);
        std::mt19937_64 shape_rng(p.seed + 17);
        for (int s = 0; s < p.perp_samples; ++s) {
            const int m = 1 + (s % p.m_max);
            std::uniform_int_distribution<long> part(0, p.mu_max);
            std::vector<long> mu(static_cast<size_t>(m));
            long total = 0;
            for (long& x : mu) {
                x = part(shape_rng) % (p.mu_max + 1);
                total += x;
            }
            while (total > p.mu_max) { // trim to the budget, deterministically
                for (long& x : mu)
                    if (total > p.mu_max && x > 0) {
                        --x;
                        --total;
                    }
            }
            std::vector<Rat> entries(static_cast<size_t>(MVMatrix::free_count(mu)));
            for (Rat& x : entries) x = rs.next();
            Lattice L = mv_to_lattice(MVMatrix::from_free(mu, entries));
            RatLattice dd = perp(perp(L));
            if (!(dd == embed(L))) {
                ok = false;
                why = "sample " + std::to_string(s) + ": " + dd.str() + " vs " + embed(L).str();
                break;
            }
        }
        rep.add("perp involution", ok, why);
        const Lattice L0 = Lattice::standard(static_cast<size_t>(std::max(1, p.m_max)));
        rep.add("perp fixes the standard lattice", perp(L0) == embed(L0));
    }
    return rep;
}

} // namespace qhowe
