#pragma once

// The gl_n weight lattice Z^n, root vectors, the standard pairing, the
// symmetric-group action on weights, and the weighted length.
//
// Conventions: the simple root alpha_i (1 <= i <= n-1) is (0,..,-1,+1,..,0)
// with the -1 in position i; alpha_0 = -(alpha_1 + ... + alpha_{n-1}).
// Permutations are stored in one-line notation with composition
// (v o w)(a) = v(w(a)).

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhowe {

using Weight = std::vector<long>;

inline std::string weight_str(const Weight& k) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) out << ",";
        out << k[i];
    }
    out << "]";
    return out.str();
}

// An element of the root lattice as coefficients (a_1,...,a_{n-1}) of the
// simple roots; rank n is carried so the ambient expansion is well defined.
class RootVector {
public:
    RootVector() = default;
    RootVector(int n, std::vector<long> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
        if (n_ < 1 || coeffs_.size() + 1 != static_cast<size_t>(n_))
            throw std::invalid_argument("RootVector: need n-1 coefficients");
    }

    static RootVector simple(int i, int n) {
        if (i < 1 || i > n - 1) throw std::invalid_argument("RootVector::simple: index out of range");
        std::vector<long> c(static_cast<size_t>(n - 1), 0);
        c[static_cast<size_t>(i - 1)] = 1;
        return RootVector(n, std::move(c));
    }
    // alpha_0 = -(alpha_1 + ... + alpha_{n-1})
    static RootVector alpha0(int n) {
        return RootVector(n, std::vector<long>(static_cast<size_t>(n - 1), -1));
    }
    static RootVector zero(int n) {
        return RootVector(n, std::vector<long>(static_cast<size_t>(n - 1), 0));
    }

    int rank() const { return n_; }
    const std::vector<long>& coeffs() const { return coeffs_; }

    // expansion in Z^n
    Weight ambient() const {
        Weight v(static_cast<size_t>(n_), 0);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            v[i] -= coeffs_[i];
            v[i + 1] += coeffs_[i];
        }
        return v;
    }

    RootVector operator-() const {
        std::vector<long> c = coeffs_;
        for (long& x : c) x = -x;
        return RootVector(n_, std::move(c));
    }
    friend RootVector operator+(const RootVector& a, const RootVector& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("RootVector: rank mismatch");
        std::vector<long> c = a.coeffs_;
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return RootVector(a.n_, std::move(c));
    }
    bool operator==(const RootVector& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const RootVector& o) const { return !(*this == o); }

    bool is_zero() const {
        for (long c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // reflection s_i acting on the root (swap of ambient coordinates i, i+1,
    // re-expanded in the simple-root basis)
    RootVector reflect(int i) const {
        Weight v = ambient();
        if (i < 1 || i >= n_) throw std::invalid_argument("RootVector::reflect: index out of range");
        std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
        // v sums to 0, so it lies in the root lattice; peel off coefficients
        // from the left: coeff of alpha_j = -(v_1 + ... + v_j).
        std::vector<long> c(static_cast<size_t>(n_ - 1), 0);
        long partial = 0;
        for (int j = 0; j < n_ - 1; ++j) {
            partial += v[static_cast<size_t>(j)];
            c[static_cast<size_t>(j)] = -partial;
        }
        return RootVector(n_, std::move(c));
    }

private:
    int n_ = 1;
    std::vector<long> coeffs_;
};

// standard dot product of k with the ambient expansion of alpha;
// for alpha = alpha_i this is -k_i + k_{i+1}
inline long pairing(const Weight& k, const RootVector& alpha) {
    if (k.size() != static_cast<size_t>(alpha.rank()))
        throw std::invalid_argument("pairing: rank mismatch");
    Weight v = alpha.ambient();
    long s = 0;
    for (size_t i = 0; i < k.size(); ++i) s += k[i] * v[i];
    return s;
}

// pairing of two roots under the same ambient form
inline long root_pairing(const RootVector& a, const RootVector& b) {
    return pairing(a.ambient(), b);
}

// s_i . k : swap entries k_i, k_{i+1} (i is 1-based)
inline Weight weyl_act(int i, const Weight& k) {
    if (i < 1 || static_cast<size_t>(i) >= k.size())
        throw std::invalid_argument("weyl_act: index out of range");
    Weight r = k;
    std::swap(r[static_cast<size_t>(i - 1)], r[static_cast<size_t>(i)]);
    return r;
}

// Permutation of {1..n} in one-line notation: w[a-1] = w(a).
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& w) {
    std::vector<bool> seen(w.size(), false);
    for (int x : w) {
        if (x < 1 || static_cast<size_t>(x) > w.size() || seen[static_cast<size_t>(x - 1)]) return false;
        seen[static_cast<size_t>(x - 1)] = true;
    }
    return true;
}

namespace detail {

inline void weights_with_sum(int n, long N, Weight& prefix, std::vector<Weight>& out) {
    if (n == 1) {
        prefix.push_back(N);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long v = 0; v <= N; ++v) {
        prefix.push_back(v);
        weights_with_sum(n - 1, N - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// weights k in N^n with sum N, ascending lexicographic order
inline std::vector<Weight> weights_with_sum(int n, long N) {
    if (n < 1 || N < 0) throw std::invalid_argument("weights_with_sum: n >= 1, N >= 0 required");
    std::vector<Weight> out;
    Weight prefix;
    detail::weights_with_sum(n, N, prefix, out);
    return out;
}

// weighted length: sum of k_a * k_b over inversion pairs a < b, w(a) > w(b);
// at k = (1,...,1) this is the ordinary Coxeter length
inline long weighted_length(const Permutation& w, const Weight& k) {
    if (w.size() != k.size()) throw std::invalid_argument("weighted_length: rank mismatch");
    if (!is_permutation(w)) throw std::invalid_argument("weighted_length: not a permutation");
    for (long x : k)
        if (x < 0) throw std::invalid_argument("weighted_length: negative weight entry");
    long total = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) total += k[a] * k[b];
    return total;
}

} // namespace qhowe
