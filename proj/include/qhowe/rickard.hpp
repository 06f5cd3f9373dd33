#pragma once

// Braid operators on the Howe modules, as alternating sums of divided-power
// compositions (the Euler characteristic of the half-twist complex). With
// lam = <k, alpha_i>:
//
//   lam >= 0:  T_i|_k = sum_{s>=0} (-q^{-1})^s  E_i^{(s)} F_i^{(lam+s)}
//   lam <= 0:  T_i|_k = (-1)^{-lam} q^{lam} sum_{s>=0} (-q^{-1})^s
//                       F_i^{(s)} E_i^{(-lam+s)}
//
// (the two formulas agree at lam = 0). Each summand sends weight k to
// s_i(k), so the block is a map between those two weight spaces. The sum
// truncates: the s-term needs lam+s (resp. -lam+s) units in column i+1
// (resp. i), so terms vanish for s > min(k_i, k_{i+1}); a hard assertion
// bounds the loop by the total weight.
//
// The primed variant rescales by the source weight entry:
//   T'_i|_k = (-1)^{k_i} q^{k_i} T_i|_k.
// T and T' braid identically: the scalar factors a braid word collects
// depend only on the multiset of weight entries along the path, which the
// two sides of a braid relation share.

#include <string>
#include <vector>

#include "qhowe/errors.hpp"
#include "qhowe/howe_module.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/report.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

enum class BraidVariant { T, Tprime };

inline OperatorBlock rickard_block(int i, const Weight& k, Flavor flavor, int m,
                                   BraidVariant variant = BraidVariant::T,
                                   const ApplyOptions& opts = {}) {
    const int n = static_cast<int>(k.size());
    if (i < 1 || i > n - 1) throw std::invalid_argument("rickard_block: index out of range");
    if (enumerate_basis(flavor, k, m).empty())
        throw std::invalid_argument("rickard_block: empty weight space at " + weight_str(k));

    const long lam = pairing(k, RootVector::simple(i, n));
    long total = 0;
    for (long ki : k) total += ki;

    OperatorBlock acc = OperatorBlock::zero(flavor, m, k, weyl_act(i, k));
    for (long s = 0;; ++s) {
        if (s > total + 1)
            throw std::logic_error("rickard_block: truncation bound exceeded"); // unreachable
        std::vector<Gen> word;
        if (lam >= 0)
            word = {Gen::E(i, s), Gen::F(i, lam + s)};
        else
            word = {Gen::F(i, s), Gen::E(i, -lam + s)};
        OperatorBlock term = operator_block(word, k, flavor, m, opts);
        if (term.is_zero()) break;
        term.scale(RatFun(LaurentPoly::term((s % 2 == 0) ? 1 : -1, -s)));
        acc += term;
    }
    if (lam < 0) {
        // (-1)^{-lam} q^{lam}
        acc.scale(RatFun(LaurentPoly::term(((-lam) % 2 == 0) ? 1 : -1, lam)));
    }
    if (variant == BraidVariant::Tprime) {
        const long ki = k[static_cast<size_t>(i - 1)];
        acc.scale(RatFun(LaurentPoly::term((ki % 2 == 0) ? 1 : -1, ki)));
    }
    return acc;
}

// Exact inverse; Singular on a non-invertible block (which would falsify the
// invertibility of the half twist).
inline OperatorBlock invert_block(const OperatorBlock& b) { return b.inverse(); }

namespace detail {

// composite block of T_{w[last]} ... T_{w[0]} starting at weight k
// (w[0] acts first)
inline OperatorBlock braid_path(const std::vector<int>& w, const Weight& k, Flavor flavor, int m,
                                BraidVariant variant) {
    Weight cur = k;
    OperatorBlock acc = OperatorBlock::identity(flavor, m, k);
    for (int i : w) {
        OperatorBlock step = rickard_block(i, cur, flavor, m, variant);
        acc = step.compose(acc);
        cur = weyl_act(i, cur);
    }
    return acc;
}

inline bool det_is_unit(const RatFun& d) {
    if (!d.den().is_one()) return false;
    const auto& t = d.num().terms();
    if (t.size() != 1) return false;
    const Int c = t.begin()->second;
    return c == 1 || c == -1;
}

} // namespace detail

struct BraidCheckParams {
    int n = 3;
    int m = 1;
    long N_max = 2;
    Flavor flavor = Flavor::sym;
};

// Blockwise verification on every weight with nonnegative entries summing to
// at most N_max: braid relation for adjacent indices, commutation for
// distant indices, invertibility (with unit determinant) of every block, for
// both the plain and primed variants.
inline Report check_braid(const BraidCheckParams& p) {
    Report rep;
    rep.suite = "braid";
    rep.param("n", std::to_string(p.n));
    rep.param("m", std::to_string(p.m));
    rep.param("N_max", std::to_string(p.N_max));
    rep.param("flavor", flavor_str(p.flavor));

    for (long N = 0; N <= p.N_max; ++N) {
        for (const Weight& k : weights_with_sum(p.n, N)) {
            if (enumerate_basis(p.flavor, k, p.m).empty()) continue;
            const std::string kstr = weight_str(k);
            for (BraidVariant variant : {BraidVariant::T, BraidVariant::Tprime}) {
                const char* vname = (variant == BraidVariant::T) ? "T" : "T'";
                for (int i = 1; i <= p.n - 2; ++i) {
                    const int j = i + 1;
                    OperatorBlock lhs = detail::braid_path({i, j, i}, k, p.flavor, p.m, variant);
                    OperatorBlock rhs = detail::braid_path({j, i, j}, k, p.flavor, p.m, variant);
                    const bool ok = lhs == rhs;
                    rep.add(std::string(vname) + " braid " + kstr + " (i,j)=(" + std::to_string(i) +
                                "," + std::to_string(j) + ")",
                            ok, ok ? "" : "lhs " + lhs.str() + " rhs " + rhs.str());
                }
                for (int i = 1; i <= p.n - 1; ++i)
                    for (int j = i + 2; j <= p.n - 1; ++j) {
                        OperatorBlock lhs = detail::braid_path({i, j}, k, p.flavor, p.m, variant);
                        OperatorBlock rhs = detail::braid_path({j, i}, k, p.flavor, p.m, variant);
                        const bool ok = lhs == rhs;
                        rep.add(std::string(vname) + " distant " + kstr + " (i,j)=(" +
                                    std::to_string(i) + "," + std::to_string(j) + ")",
                                ok, ok ? "" : "lhs " + lhs.str() + " rhs " + rhs.str());
                    }
                for (int i = 1; i <= p.n - 1; ++i) {
                    OperatorBlock b = rickard_block(i, k, p.flavor, p.m, variant);
                    bool ok = true;
                    std::string why;
                    try {
                        OperatorBlock prod = invert_block(b).compose(b);
                        if (!prod.is_identity()) {
                            ok = false;
                            why = "inverse round trip failed";
                        } else if (!detail::det_is_unit(b.det())) {
                            ok = false;
                            why = "determinant not a unit monomial: " + b.det().str();
                        }
                    } catch (const Singular& e) {
                        ok = false;
                        why = e.what();
                    }
                    rep.add(std::string(vname) + " invertible " + kstr + " i=" + std::to_string(i),
                            ok, why);
                }
            }
        }
    }
    return rep;
}

} // namespace qhowe
