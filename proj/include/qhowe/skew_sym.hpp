#pragma once

// The skew/sym comparison at the all-ones weight. At k = (1,...,1) every
// m x n counting matrix with column sums 1 is automatically 0/1, so the two
// module flavors share one basis, matrix-by-matrix; identify_bases pins that
// identification down. On that common space the dumbbell identity
//
//   [2] . id  =  B_sym - sigma(B_skew)
//
// holds for every i, where B is the block of E_i F_i at (1^n) on the
// respective module and sigma substitutes q -> -q^{-1} entry-wise (the skew
// side's internal degree shift is recorded by -q^{-1}). The identity is
// invariant under swapping the roles of the two sides and applying sigma to
// the whole equation; since sigma is an involution and sigma([2]) = -[2],
// that reads
//
//   [2] . id  =  B_skew - sigma(B_sym),
//
// checked as a second, independent assertion.

#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/howe_module.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/report.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

// The common basis at an all-ones weight: both flavors enumerate exactly the
// same matrices in the same order, so the bijection is the identity on the
// returned list.
inline std::vector<BasisElement> identify_bases(const Weight& k, int m) {
    for (long ki : k)
        if (ki != 1) throw std::invalid_argument("identify_bases: weight must be (1,...,1)");
    if (k.empty()) throw std::invalid_argument("identify_bases: empty weight");
    std::vector<BasisElement> sym = enumerate_basis(Flavor::sym, k, m);
    const std::vector<BasisElement> skew = enumerate_basis(Flavor::skew, k, m);
    if (sym != skew) throw std::logic_error("identify_bases: flavor bases disagree at (1,...,1)");
    return sym;
}

inline std::vector<BasisElement> identify_bases(int n, int m) {
    if (n < 1) throw std::invalid_argument("identify_bases: n >= 1 required");
    return identify_bases(Weight(static_cast<size_t>(n), 1), m);
}

inline Report dumbbell_check(int n, int m, const ApplyOptions& opts = {}) {
    if (n < 1 || m < 1) throw std::invalid_argument("dumbbell_check: n, m >= 1 required");
    Report rep;
    rep.suite = "dumbbell";
    rep.param("n", std::to_string(n));
    rep.param("m", std::to_string(m));
    const Weight ones(static_cast<size_t>(n), 1);

    {
        bool ok = true;
        std::string why;
        try {
            identify_bases(ones, m);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        rep.add("bases identified at (1^" + std::to_string(n) + ")", ok, why);
    }

    const size_t dim = enumerate_basis(Flavor::sym, ones, m).size();
    const RatFun two(qint(2));
    for (int i = 1; i <= n - 1; ++i) {
        const std::vector<Gen> word{Gen::E(i), Gen::F(i)};
        const OperatorBlock b_sym = operator_block(word, ones, Flavor::sym, m, opts);
        const OperatorBlock b_skew = operator_block(word, ones, Flavor::skew, m, opts);

        auto holds = [&](const OperatorBlock& plain, const OperatorBlock& subbed) {
            const OperatorBlock sig = subbed.substitute_neg_inv();
            for (size_t r = 0; r < dim; ++r)
                for (size_t c = 0; c < dim; ++c) {
                    const RatFun want = r == c ? two : RatFun();
                    if (plain.entries[r][c] - sig.entries[r][c] != want) return false;
                }
            return true;
        };
        const std::string blocks =
            "B_sym = " + b_sym.str() + "; B_skew = " + b_skew.str();
        const bool fwd = holds(b_sym, b_skew);
        rep.add("[2]id = B_sym - sigma(B_skew), i=" + std::to_string(i), fwd,
                fwd ? "" : blocks);
        const bool rev = holds(b_skew, b_sym);
        rep.add("[2]id = B_skew - sigma(B_sym), i=" + std::to_string(i), rev,
                rev ? "" : blocks);
    }
    return rep;
}

} // namespace qhowe
