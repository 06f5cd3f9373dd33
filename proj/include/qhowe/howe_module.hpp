#pragma once

// The symmetric and skew Howe modules over QQ(q), realized concretely:
// the sym module is the m-fold tensor product of quantum symmetric powers of
// the rank-n standard module (summed over per-factor degrees), the skew
// module replaces symmetric powers by exterior powers. A weight-k basis
// element is an m x n matrix of naturals with column sums k (entries <= 1 for
// skew); row a records the exponent data of tensor factor a.
//
// Single-factor action on an exponent vector a (conventions; the relation
// suite is the correctness oracle):
//   E_i . a = [a_i]     * (a - e_i + e_{i+1})
//   F_i . a = [a_{i+1}] * (a + e_i - e_{i+1})
//   K_i . a = q^{-a_i + a_{i+1}} * a
// so E_i raises the weight by alpha_i = (...,-1,+1,...). For the skew flavor
// a move that would push an entry above 1 yields 0 (wedge square vanishes).
//
// Tensor extension by the coproduct, applied left-to-right over the m rows:
//   D(E_i) = E_i (x) 1 + K_i (x) E_i
//   D(F_i) = F_i (x) K_i^{-1} + 1 (x) F_i
//   D(K_i) = K_i (x) K_i
// i.e. the E_i term acting in row a carries q^{<row_b, alpha_i>} for each
// b < a, and the F_i term carries q^{-<row_b, alpha_i>} for each b > a.
//
// Operator words are read as products: in [E_1, F_1] the rightmost factor
// acts first, so the word denotes the operator E_1 F_1.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qhowe/errors.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/report.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

enum class Flavor { sym, skew };

inline std::string flavor_str(Flavor f) { return f == Flavor::sym ? "sym" : "skew"; }

struct BasisElement {
    // rows[a][j]: exponent of variable j in tensor factor a
    std::vector<std::vector<long>> rows;

    int m() const { return static_cast<int>(rows.size()); }
    int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

    Weight col_sums() const {
        Weight k(rows.empty() ? 0 : rows[0].size(), 0);
        for (const auto& r : rows)
            for (size_t j = 0; j < r.size(); ++j) k[j] += r[j];
        return k;
    }

    bool operator==(const BasisElement& o) const { return rows == o.rows; }
    bool operator<(const BasisElement& o) const { return rows < o.rows; } // row-major lex

    std::string str() const {
        std::ostringstream out;
        out << "[";
        for (size_t a = 0; a < rows.size(); ++a) {
            if (a) out << ",";
            out << "[";
            for (size_t j = 0; j < rows[a].size(); ++j) {
                if (j) out << ",";
                out << rows[a][j];
            }
            out << "]";
        }
        out << "]";
        return out.str();
    }
};

namespace detail {

inline void enumerate_rec(Flavor flavor, int m, int n, int a, int j, Weight& remaining,
                          std::vector<std::vector<long>>& rows, std::vector<BasisElement>& out) {
    if (a == m) {
        bool done = true;
        for (long r : remaining)
            if (r != 0) { done = false; break; }
        if (done) out.push_back(BasisElement{rows});
        return;
    }
    if (j == n) {
        enumerate_rec(flavor, m, n, a + 1, 0, remaining, rows, out);
        return;
    }
    const long cap_entry = (flavor == Flavor::skew) ? 1 : remaining[static_cast<size_t>(j)];
    const long rows_left_after = m - a - 1;
    for (long v = 0; v <= std::min(cap_entry, remaining[static_cast<size_t>(j)]); ++v) {
        // prune: the remaining rows must be able to absorb what is left
        const long rest = remaining[static_cast<size_t>(j)] - v;
        if (flavor == Flavor::skew && rest > rows_left_after) continue;
        rows[static_cast<size_t>(a)][static_cast<size_t>(j)] = v;
        remaining[static_cast<size_t>(j)] -= v;
        enumerate_rec(flavor, m, n, a, j + 1, remaining, rows, out);
        remaining[static_cast<size_t>(j)] += v;
        rows[static_cast<size_t>(a)][static_cast<size_t>(j)] = 0;
    }
}

} // namespace detail

// All m x n matrices with column sums k (entries <= 1 for skew), ascending in
// lexicographic order by row-major reading. Empty when some k_i < 0, or for
// skew when some k_i > m.
inline std::vector<BasisElement> enumerate_basis(Flavor flavor, const Weight& k, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_basis: m >= 1 required");
    std::vector<BasisElement> out;
    for (long ki : k) {
        if (ki < 0) return out;
        if (flavor == Flavor::skew && ki > m) return out;
    }
    const int n = static_cast<int>(k.size());
    Weight remaining = k;
    std::vector<std::vector<long>> rows(static_cast<size_t>(m),
                                        std::vector<long>(static_cast<size_t>(n), 0));
    detail::enumerate_rec(flavor, m, n, 0, 0, remaining, rows, out);
    return out;
}

// Sparse vector in one weight space of the Howe module.
struct ModuleVector {
    Flavor flavor = Flavor::sym;
    int m = 1;
    int n = 1;
    std::map<BasisElement, LaurentPoly> coords;

    static ModuleVector unit(Flavor f, int m, const BasisElement& b) {
        ModuleVector v;
        v.flavor = f;
        v.m = m;
        v.n = b.n();
        v.coords[b] = LaurentPoly(1);
        return v;
    }

    bool is_zero() const { return coords.empty(); }

    void add(const BasisElement& b, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coords.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coords.erase(it);
        }
    }
    ModuleVector& operator+=(const ModuleVector& o) {
        for (const auto& [b, c] : o.coords) add(b, c);
        return *this;
    }
    ModuleVector& scale(const LaurentPoly& c) {
        if (c.is_zero()) {
            coords.clear();
            return *this;
        }
        for (auto& [b, x] : coords) x *= c;
        return *this;
    }
    bool operator==(const ModuleVector& o) const {
        return flavor == o.flavor && m == o.m && coords == o.coords;
    }

    std::string str() const {
        if (coords.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [b, c] : coords) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")*" << b.str();
        }
        return out.str();
    }
};

enum class GenKind { E, F, K, Kinv };

struct Gen {
    GenKind kind = GenKind::E;
    int i = 1;        // 1 <= i <= n-1
    long power = 1;   // divided power for E/F, plain power for K

    static Gen E(int i, long r = 1) { return Gen{GenKind::E, i, r}; }
    static Gen F(int i, long r = 1) { return Gen{GenKind::F, i, r}; }
    static Gen K(int i) { return Gen{GenKind::K, i, 1}; }
    static Gen Kinv(int i) { return Gen{GenKind::Kinv, i, 1}; }
};

// Test hook: flipping the sign of the K (x) E_i term in the coproduct breaks
// the tensor-level relations; the harness exposes it to prove the suites can
// fail. Production code never sets it.
struct ApplyOptions {
    bool flip_coproduct_sign = false;
};

namespace detail {

inline long row_alpha_pairing(const std::vector<long>& row, int i) {
    return -row[static_cast<size_t>(i - 1)] + row[static_cast<size_t>(i)];
}

} // namespace detail

// One application of E_i, F_i, K_i or K_i^{-1} (g.power is ignored here; use
// divided_power for E^{(r)}, F^{(r)}).
inline ModuleVector apply_gen_once(GenKind kind, int i, const ModuleVector& v,
                                   const ApplyOptions& opts = {}) {
    ModuleVector out;
    out.flavor = v.flavor;
    out.m = v.m;
    out.n = v.n;
    if (i < 1 || i > v.n - 1) throw std::invalid_argument("apply_gen: index out of range");
    const size_t col = static_cast<size_t>(i - 1);
    for (const auto& [b, c] : v.coords) {
        if (kind == GenKind::K || kind == GenKind::Kinv) {
            long e = 0;
            for (const auto& row : b.rows) e += detail::row_alpha_pairing(row, i);
            if (kind == GenKind::Kinv) e = -e;
            out.add(b, c.shifted(e));
            continue;
        }
        if (kind == GenKind::E) {
            // sum over rows: (prod_{b<a} K on row b) (x) E on row a
            long kpre = 0; // running sum of <row_b, alpha_i> for b < a
            for (int a = 0; a < b.m(); ++a) {
                const auto& row = b.rows[static_cast<size_t>(a)];
                const long ai = row[col];
                if (ai > 0) {
                    BasisElement t = b;
                    t.rows[static_cast<size_t>(a)][col] -= 1;
                    t.rows[static_cast<size_t>(a)][col + 1] += 1;
                    const bool valid =
                        v.flavor == Flavor::sym || t.rows[static_cast<size_t>(a)][col + 1] <= 1;
                    if (valid) {
                        LaurentPoly coef = qint(ai).shifted(kpre) * c;
                        if (opts.flip_coproduct_sign && (a % 2) == 1) coef = -coef;
                        out.add(t, coef);
                    }
                }
                kpre += detail::row_alpha_pairing(row, i);
            }
        } else { // F
            // sum over rows: F on row a (x) (prod_{b>a} K^{-1} on row b)
            long ktail = 0; // running sum of <row_b, alpha_i> for b > a
            for (int a = b.m() - 1; a >= 0; --a) {
                const auto& row = b.rows[static_cast<size_t>(a)];
                const long ai1 = row[col + 1];
                if (ai1 > 0) {
                    BasisElement t = b;
                    t.rows[static_cast<size_t>(a)][col + 1] -= 1;
                    t.rows[static_cast<size_t>(a)][col] += 1;
                    const bool valid =
                        v.flavor == Flavor::sym || t.rows[static_cast<size_t>(a)][col] <= 1;
                    if (valid) out.add(t, qint(ai1).shifted(-ktail) * c);
                }
                ktail += detail::row_alpha_pairing(row, i);
            }
        }
    }
    return out;
}

inline ModuleVector apply_gen(const Gen& g, const ModuleVector& v, const ApplyOptions& opts = {}) {
    if (g.kind == GenKind::K || g.kind == GenKind::Kinv) return apply_gen_once(g.kind, g.i, v, opts);
    if (g.power < 0) throw std::invalid_argument("apply_gen: negative power");
    ModuleVector w = v;
    for (long t = 0; t < g.power; ++t) w = apply_gen_once(g.kind, g.i, w, opts);
    return w;
}

// E^{(r)} / F^{(r)}: apply r times, then divide every coordinate exactly by
// [r]!. NotDivisible here means divided-power integrality failed (a bug).
inline ModuleVector divided_power(const Gen& g, long r, const ModuleVector& v,
                                  const ApplyOptions& opts = {}) {
    if (g.kind != GenKind::E && g.kind != GenKind::F)
        throw std::invalid_argument("divided_power: only E/F generators");
    if (r < 0) throw std::invalid_argument("divided_power: r >= 0 required");
    ModuleVector w = v;
    for (long t = 0; t < r; ++t) w = apply_gen_once(g.kind, g.i, w, opts);
    if (r >= 2) {
        const LaurentPoly d = qfact(r);
        for (auto& [b, c] : w.coords) c = div_exact(c, d);
    }
    return w;
}

// Weight-block matrix of an operator word between two weight spaces.
struct OperatorBlock {
    Flavor flavor = Flavor::sym;
    int m = 1;
    Weight source, target;
    // entries[row][col] with rows indexed by enumerate_basis(target),
    // cols by enumerate_basis(source)
    std::vector<std::vector<RatFun>> entries;

    size_t rows() const { return entries.size(); }
    size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }

    static OperatorBlock zero(Flavor f, int m, const Weight& src, const Weight& tgt) {
        OperatorBlock b;
        b.flavor = f;
        b.m = m;
        b.source = src;
        b.target = tgt;
        const size_t r = enumerate_basis(f, tgt, m).size();
        const size_t c = enumerate_basis(f, src, m).size();
        b.entries.assign(r, std::vector<RatFun>(c));
        return b;
    }
    static OperatorBlock identity(Flavor f, int m, const Weight& k) {
        OperatorBlock b = zero(f, m, k, k);
        for (size_t i = 0; i < b.rows(); ++i) b.entries[i][i] = RatFun(1);
        return b;
    }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows() != cols()) return false;
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) {
                if (i == j && !entries[i][j].is_one()) return false;
                if (i != j && !entries[i][j].is_zero()) return false;
            }
        return true;
    }
    bool operator==(const OperatorBlock& o) const {
        return source == o.source && target == o.target && entries == o.entries;
    }

    OperatorBlock& operator+=(const OperatorBlock& o) {
        if (source != o.source || target != o.target)
            throw std::invalid_argument("OperatorBlock: weight mismatch in addition");
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) entries[i][j] += o.entries[i][j];
        return *this;
    }
    friend OperatorBlock operator+(OperatorBlock a, const OperatorBlock& b) { return a += b; }
    OperatorBlock& operator-=(const OperatorBlock& o) {
        if (source != o.source || target != o.target)
            throw std::invalid_argument("OperatorBlock: weight mismatch in subtraction");
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) entries[i][j] -= o.entries[i][j];
        return *this;
    }
    friend OperatorBlock operator-(OperatorBlock a, const OperatorBlock& b) { return a -= b; }
    OperatorBlock& scale(const RatFun& c) {
        for (auto& row : entries)
            for (auto& x : row) x *= c;
        return *this;
    }

    // composition this o other (other acts first); requires other.target ==
    // this->source
    OperatorBlock compose(const OperatorBlock& other) const {
        if (source != other.target)
            throw std::invalid_argument("OperatorBlock: inner weights disagree in composition");
        OperatorBlock r = zero(flavor, m, other.source, target);
        for (size_t i = 0; i < rows(); ++i)
            for (size_t t = 0; t < cols(); ++t) {
                if (entries[i][t].is_zero()) continue;
                for (size_t j = 0; j < other.cols(); ++j) {
                    if (other.entries[t][j].is_zero()) continue;
                    r.entries[i][j] += entries[i][t] * other.entries[t][j];
                }
            }
        return r;
    }

    // entry-wise q -> -q^{-1}
    OperatorBlock substitute_neg_inv() const {
        OperatorBlock r = *this;
        for (auto& row : r.entries)
            for (auto& x : row) x = x.substitute_neg_inv();
        return r;
    }

    // Exact inverse by fraction-field Gaussian elimination.
    OperatorBlock inverse() const {
        if (rows() != cols()) throw Singular("OperatorBlock: inverse of non-square block");
        const size_t d = rows();
        std::vector<std::vector<RatFun>> a = entries;
        OperatorBlock inv = identity(flavor, m, target);
        inv.source = target;
        inv.target = source;
        auto& b = inv.entries;
        for (size_t col = 0; col < d; ++col) {
            size_t piv = col;
            while (piv < d && a[piv][col].is_zero()) ++piv;
            if (piv == d) throw Singular("OperatorBlock: singular block");
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
            const RatFun pinv = a[col][col].inverse();
            for (size_t j = 0; j < d; ++j) {
                a[col][j] *= pinv;
                b[col][j] *= pinv;
            }
            for (size_t r2 = 0; r2 < d; ++r2) {
                if (r2 == col || a[r2][col].is_zero()) continue;
                const RatFun f = a[r2][col];
                for (size_t j = 0; j < d; ++j) {
                    a[r2][j] -= f * a[col][j];
                    b[r2][j] -= f * b[col][j];
                }
            }
        }
        return inv;
    }

    // determinant via the same elimination (used by the unit-determinant test)
    RatFun det() const {
        if (rows() != cols()) throw Singular("OperatorBlock: determinant of non-square block");
        std::vector<std::vector<RatFun>> a = entries;
        const size_t d = rows();
        RatFun det(1);
        for (size_t col = 0; col < d; ++col) {
            size_t piv = col;
            while (piv < d && a[piv][col].is_zero()) ++piv;
            if (piv == d) return RatFun(0);
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = -det;
            }
            det *= a[col][col];
            const RatFun pinv = a[col][col].inverse();
            for (size_t r2 = col + 1; r2 < d; ++r2) {
                if (a[r2][col].is_zero()) continue;
                const RatFun f = a[r2][col] * pinv;
                for (size_t j = col; j < d; ++j) a[r2][j] -= f * a[col][j];
            }
        }
        return det;
    }

    std::string str() const {
        std::ostringstream out;
        out << flavor_str(flavor) << " m=" << m << " " << weight_str(source) << " -> "
            << weight_str(target) << " [";
        for (size_t i = 0; i < rows(); ++i) {
            if (i) out << "; ";
            for (size_t j = 0; j < cols(); ++j) {
                if (j) out << ", ";
                out << entries[i][j].str();
            }
        }
        out << "]";
        return out.str();
    }
};

// net weight displacement of a word (rightmost factor acts first, but the
// displacement is order-independent)
inline Weight word_target(const std::vector<Gen>& word, const Weight& k) {
    Weight t = k;
    for (const Gen& g : word) {
        if (g.kind == GenKind::K || g.kind == GenKind::Kinv) continue;
        const size_t c = static_cast<size_t>(g.i - 1);
        const long d = (g.kind == GenKind::E) ? g.power : -g.power;
        t[c] -= d;
        t[c + 1] += d;
    }
    return t;
}

// Materialize the action of a word (divided powers per Gen::power) on the
// weight-k space. Columns are images of the source basis vectors expressed in
// the target basis.
inline OperatorBlock operator_block(const std::vector<Gen>& word, const Weight& k, Flavor flavor,
                                    int m, const ApplyOptions& opts = {}) {
    const std::vector<BasisElement> src = enumerate_basis(flavor, k, m);
    const Weight tgt = word_target(word, k);
    const std::vector<BasisElement> dst = enumerate_basis(flavor, tgt, m);
    std::map<BasisElement, size_t> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;

    OperatorBlock block;
    block.flavor = flavor;
    block.m = m;
    block.source = k;
    block.target = tgt;
    block.entries.assign(dst.size(), std::vector<RatFun>(src.size()));

    for (size_t j = 0; j < src.size(); ++j) {
        ModuleVector v = ModuleVector::unit(flavor, m, src[j]);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (it->kind == GenKind::E || it->kind == GenKind::F)
                v = divided_power(*it, it->power, v, opts);
            else
                v = apply_gen(*it, v, opts);
        }
        for (const auto& [b, c] : v.coords) {
            auto found = dst_index.find(b);
            if (found == dst_index.end())
                throw std::invalid_argument("operator_block: image escaped the target space");
            block.entries[found->second][j] = RatFun(c);
        }
    }
    return block;
}

// ---------------------------------------------------------------------------
// Relation suite. Verified blockwise, one source basis vector at a time:
//   (a) E_i F_i - F_i E_i = [<k,alpha_i>] . id
//   (b) E_i F_j = F_j E_i for i != j
//   (c) E_i^2 = [2] . E_i^{(2)} and F_i^2 = [2] . F_i^{(2)}
//   (d) divided-power integrality for r <= 3
//   (e) Serre: X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 = 0 for |i-j| = 1,
//       X in {E, F}
//   (f) K-conjugation: K_i E_j K_i^{-1} = q^{<alpha_j, alpha_i>} E_j
//   (g) the m-factor action agrees with one coproduct step against the
//       (m-1)-factor action (checked here structurally via (a)-(f); the unit
//       tests additionally compare against an independent recursive oracle)
//   (h) q = 1 specialization of (a) reproduces the classical commutator
// ---------------------------------------------------------------------------

struct RelationParams {
    int n = 2;
    int m = 1;
    long N_max = 2;
    Flavor flavor = Flavor::sym;
    ApplyOptions opts;
};

inline Report check_relations(const RelationParams& p) {
    Report rep;
    rep.suite = "relations";
    rep.param("n", std::to_string(p.n));
    rep.param("m", std::to_string(p.m));
    rep.param("N_max", std::to_string(p.N_max));
    rep.param("flavor", flavor_str(p.flavor));

    for (long N = 0; N <= p.N_max; ++N) {
        for (const Weight& k : weights_with_sum(p.n, N)) {
            const std::vector<BasisElement> basis = enumerate_basis(p.flavor, k, p.m);
            if (basis.empty()) continue;
            const std::string kstr = weight_str(k);

            for (int i = 1; i <= p.n - 1; ++i) {
                // (a) EF - FE = [<k,alpha_i>] id, plus (h) its q=1 shadow
                {
                    const LaurentPoly lam = qint(pairing(k, RootVector::simple(i, p.n)));
                    bool ok = true;
                    bool ok_q1 = true;
                    std::string why;
                    for (const BasisElement& b : basis) {
                        ModuleVector v = ModuleVector::unit(p.flavor, p.m, b);
                        ModuleVector ef = apply_gen_once(GenKind::E, i,
                                                         apply_gen_once(GenKind::F, i, v, p.opts), p.opts);
                        ModuleVector fe = apply_gen_once(GenKind::F, i,
                                                         apply_gen_once(GenKind::E, i, v, p.opts), p.opts);
                        ModuleVector want = v;
                        want.scale(lam);
                        ModuleVector got = ef;
                        ModuleVector neg = fe;
                        neg.scale(LaurentPoly(-1));
                        got += neg;
                        if (!(got == want)) {
                            ok = false;
                            why = "basis " + b.str() + ": got " + got.str() + ", want " + want.str();
                            break;
                        }
                        // classical shadow: coefficients specialize to
                        // (k_{i+1} - k_i) on the diagonal
                        Int diag = 0;
                        auto it = got.coords.find(b);
                        if (it != got.coords.end()) diag = it->second.eval_one();
                        if (diag != lam.eval_one()) ok_q1 = false;
                    }
                    rep.add("EF-FE " + kstr + " i=" + std::to_string(i), ok, why);
                    rep.add("q=1 EF-FE " + kstr + " i=" + std::to_string(i), ok_q1,
                            ok_q1 ? "" : "classical specialization mismatch");
                }

                // (c) X^2 = [2] X^{(2)} and (d) integrality r <= 3
                for (GenKind kind : {GenKind::E, GenKind::F}) {
                    const char* gname = (kind == GenKind::E) ? "E" : "F";
                    bool ok_sq = true;
                    bool ok_int = true;
                    std::string why;
                    for (const BasisElement& b : basis) {
                        ModuleVector v = ModuleVector::unit(p.flavor, p.m, b);
                        try {
                            ModuleVector sq = apply_gen_once(kind, i, apply_gen_once(kind, i, v, p.opts), p.opts);
                            ModuleVector dp = divided_power(Gen{kind, i, 1}, 2, v, p.opts);
                            dp.scale(qint(2));
                            if (!(sq == dp)) {
                                ok_sq = false;
                                why = "basis " + b.str();
                            }
                            divided_power(Gen{kind, i, 1}, 3, v, p.opts);
                        } catch (const NotDivisible& e) {
                            ok_int = false;
                            why = e.what();
                        }
                    }
                    rep.add(std::string(gname) + "^2=[2]" + gname + "^(2) " + kstr + " i=" + std::to_string(i),
                            ok_sq, ok_sq ? "" : why);
                    rep.add(std::string("divided-power integrality ") + gname + " r<=3 " + kstr +
                                " i=" + std::to_string(i),
                            ok_int, ok_int ? "" : why);
                }

                // (f) K-conjugation against every generator index j
                for (int j = 1; j <= p.n - 1; ++j) {
                    const long pair_ij =
                        root_pairing(RootVector::simple(j, p.n), RootVector::simple(i, p.n));
                    bool ok = true;
                    std::string why;
                    for (const BasisElement& b : basis) {
                        ModuleVector v = ModuleVector::unit(p.flavor, p.m, b);
                        ModuleVector lhs = apply_gen_once(
                            GenKind::K, i,
                            apply_gen_once(GenKind::E, j, apply_gen_once(GenKind::Kinv, i, v, p.opts), p.opts),
                            p.opts);
                        ModuleVector rhs = apply_gen_once(GenKind::E, j, v, p.opts);
                        rhs.scale(LaurentPoly::q(pair_ij));
                        if (!(lhs == rhs)) {
                            ok = false;
                            why = "basis " + b.str();
                            break;
                        }
                    }
                    rep.add("K E K^-1 " + kstr + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                            ok, why);
                }

                for (int j = 1; j <= p.n - 1; ++j) {
                    if (j == i) continue;
                    // (b) [E_i, F_j] = 0 for i != j
                    {
                        bool ok = true;
                        std::string why;
                        for (const BasisElement& b : basis) {
                            ModuleVector v = ModuleVector::unit(p.flavor, p.m, b);
                            ModuleVector lhs = apply_gen_once(GenKind::E, i,
                                                              apply_gen_once(GenKind::F, j, v, p.opts), p.opts);
                            ModuleVector rhs = apply_gen_once(GenKind::F, j,
                                                              apply_gen_once(GenKind::E, i, v, p.opts), p.opts);
                            if (!(lhs == rhs)) {
                                ok = false;
                                why = "basis " + b.str();
                                break;
                            }
                        }
                        rep.add("EiFj=FjEi " + kstr + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                ok, why);
                    }
                    // (e) Serre for adjacent indices
                    if (std::abs(i - j) == 1) {
                        for (GenKind kind : {GenKind::E, GenKind::F}) {
                            const char* gname = (kind == GenKind::E) ? "E" : "F";
                            bool ok = true;
                            std::string why;
                            for (const BasisElement& b : basis) {
                                ModuleVector v = ModuleVector::unit(p.flavor, p.m, b);
                                auto ap = [&](int idx, const ModuleVector& w) {
                                    return apply_gen_once(kind, idx, w, p.opts);
                                };
                                ModuleVector t1 = ap(i, ap(i, ap(j, v)));    // X_i X_i X_j
                                ModuleVector t2 = ap(i, ap(j, ap(i, v)));    // X_i X_j X_i
                                ModuleVector t3 = ap(j, ap(i, ap(i, v)));    // X_j X_i X_i
                                t2.scale(-qint(2));
                                ModuleVector sum = t1;
                                sum += t2;
                                sum += t3;
                                if (!sum.is_zero()) {
                                    ok = false;
                                    why = "basis " + b.str() + ": " + sum.str();
                                    break;
                                }
                            }
                            rep.add(std::string("Serre ") + gname + " " + kstr + " i=" + std::to_string(i) +
                                        " j=" + std::to_string(j),
                                    ok, why);
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace qhowe
