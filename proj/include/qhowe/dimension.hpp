#pragma once

// Dimension bookkeeping tying the module side to the lattice side: the
// weight-space dimensions of the two Howe modules, the torus-fixed-point
// count on the codimension-k stratum, and the total-dimension identity
//   sum over k with |k| = N of weight_dim(k)  =  C(nm+N-1, N)   (sym)
//                                             =  C(nm, N)       (skew).
// Everything is computed twice, by explicit enumeration and in closed form;
// enumeration is the oracle, the binomial the claim.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "qhowe/howe_module.hpp"
#include "qhowe/report.hpp"
#include "qhowe/weights.hpp"

namespace qhowe {

inline Int binom(long n, long k) {
    if (k < 0 || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// number of monomial lattices of codimension k in rank m: the compositions
// of k into m parts, enumerated and checked against C(m+k-1, k)
inline long count_fixed_points(int m, long k) {
    if (m < 1 || k < 0) throw std::invalid_argument("count_fixed_points: m >= 1, k >= 0 required");
    const long count = static_cast<long>(weights_with_sum(m, k).size());
    if (Int(count) != binom(m + k - 1, k))
        throw std::logic_error("count_fixed_points: enumeration disagrees with the binomial");
    return count;
}

// dimension of the weight-k space: one factor per column
inline Int weight_dim(Flavor f, const Weight& k, int m) {
    Int d(1);
    for (long ki : k) {
        if (ki < 0) return Int(0);
        d *= f == Flavor::sym ? binom(m + ki - 1, ki) : binom(m, ki);
    }
    return d;
}

inline Report total_dim_check(int n, int m, long N) {
    if (n < 1 || m < 1 || N < 0)
        throw std::invalid_argument("total_dim_check: n, m >= 1 and N >= 0 required");
    Report rep;
    rep.suite = "dims";
    rep.param("n", std::to_string(n));
    rep.param("m", std::to_string(m));
    rep.param("N", std::to_string(N));
    for (Flavor f : {Flavor::sym, Flavor::skew}) {
        Int total(0);
        for (const Weight& k : weights_with_sum(n, N)) total += weight_dim(f, k, m);
        const Int closed = f == Flavor::sym ? binom(static_cast<long>(n) * m + N - 1, N)
                                            : binom(static_cast<long>(n) * m, N);
        rep.add("total " + std::string(flavor_str(f)) + " n=" + std::to_string(n) +
                    " m=" + std::to_string(m) + " N=" + std::to_string(N),
                total == closed,
                total == closed ? "" : total.get_str() + " != " + closed.get_str());
    }
    return rep;
}

struct DimCheckParams {
    int fp_m_max = 6;
    long fp_k_max = 8;
    int n_max = 4;
    int m_max = 4;
    long N_max = 8;
    // cross-check weight_dim against explicit basis enumeration up to here
    int enum_n_max = 3;
    int enum_m_max = 3;
    long enum_N_max = 4;
};

inline Report check_dims(const DimCheckParams& p = {}) {
    Report rep;
    rep.suite = "dims";
    rep.param("fp_m_max", std::to_string(p.fp_m_max));
    rep.param("fp_k_max", std::to_string(p.fp_k_max));
    rep.param("n_max", std::to_string(p.n_max));
    rep.param("m_max", std::to_string(p.m_max));
    rep.param("N_max", std::to_string(p.N_max));

    {
        bool ok = true;
        std::string why;
        for (int m = 1; m <= p.fp_m_max && ok; ++m)
            for (long k = 0; k <= p.fp_k_max && ok; ++k) {
                try {
                    count_fixed_points(m, k);
                } catch (const std::logic_error& e) {
                    ok = false;
                    why = "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + e.what();
                }
            }
        rep.add("fixed points match the binomial", ok, why);
        rep.add("fixed points m=2 k=2", count_fixed_points(2, 2) == 3);
        rep.add("fixed points m=1", count_fixed_points(1, 7) == 1);
    }

    {
        bool ok = true;
        std::string why;
        for (int n = 1; n <= p.enum_n_max && ok; ++n)
            for (int m = 1; m <= p.enum_m_max && ok; ++m)
                for (long N = 0; N <= p.enum_N_max && ok; ++N)
                    for (const Weight& k : weights_with_sum(n, N))
                        for (Flavor f : {Flavor::sym, Flavor::skew}) {
                            const Int want(static_cast<long>(enumerate_basis(f, k, m).size()));
                            if (weight_dim(f, k, m) != want) {
                                ok = false;
                                why = std::string(flavor_str(f)) + " k=" + weight_str(k) +
                                      " m=" + std::to_string(m);
                                break;
                            }
                        }
        rep.add("weight_dim matches basis enumeration", ok, why);
        rep.add("weight_dim sym (1,1) m=2", weight_dim(Flavor::sym, Weight{1, 1}, 2) == 4);
        rep.add("weight_dim skew (3) m=2", weight_dim(Flavor::skew, Weight{3}, 2) == 0);
    }

    for (int n = 1; n <= p.n_max; ++n)
        for (int m = 1; m <= p.m_max; ++m)
            for (long N = 0; N <= p.N_max; ++N)
                for (const CaseResult& c : total_dim_check(n, m, N).cases)
                    rep.cases.push_back(c);
    return rep;
}

} // namespace qhowe
