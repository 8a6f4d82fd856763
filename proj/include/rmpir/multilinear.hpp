#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmpir/bitvec.hpp"

namespace rmpir {

// Evaluation point convention, used everywhere: the j-th point (1-based j)
// of F_2^m is the binary expansion of j-1 with z_1 as the least significant
// bit. A point is therefore just an m-bit integer, and position j in every
// evaluation vector corresponds to point j-1.
//
// A monomial in m binary variables is a bitmask: bit i set means z_{i+1} is
// present. Exponents never exceed one because z^v = z for v >= 1, so the mask
// representation is exact.

inline int monomial_degree(std::uint32_t vars) { return std::popcount(vars); }

inline bool monomial_eval(std::uint32_t vars, std::uint32_t point) { return (vars & point) == vars; }

inline std::string monomial_name(std::uint32_t vars) {
    if (vars == 0) return "1";
    std::string s;
    for (int i = 0; i < 32; ++i)
        if (vars & (std::uint32_t{1} << i)) s += "z" + std::to_string(i + 1);
    return s;
}

// Canonical order for generator rows and coefficient indexing: degree
// ascending, then mask value ascending.
inline bool monomial_canonical_less(std::uint32_t a, std::uint32_t b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    return da != db ? da < db : a < b;
}

inline std::vector<std::uint32_t> monomials_of_degree(int m, int d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
        if (monomial_degree(mask) == d) out.push_back(mask);
    return out;
}

inline std::vector<std::uint32_t> monomials_up_to_degree(int m, int r) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
        if (monomial_degree(mask) <= r) out.push_back(mask);
    std::sort(out.begin(), out.end(), monomial_canonical_less);
    return out;
}

// Polynomial in m binary variables with all exponents reduced via z^v = z.
// Coefficients live in GF(2), so a polynomial is just its set of present
// monomials. Terms are kept sorted by mask value and duplicate-free.
class MultilinearPoly {
public:
    explicit MultilinearPoly(int m = 0) : m_(m) {
        if (m < 0 || m > 30) throw std::invalid_argument("variable count out of range");
    }

    static MultilinearPoly zero(int m) { return MultilinearPoly(m); }

    static MultilinearPoly one(int m) { return monomial(m, 0); }

    // z_i, 1-based as in the usual notation.
    static MultilinearPoly variable(int m, int i) {
        if (i < 1 || i > m) throw std::invalid_argument("variable index out of range");
        return monomial(m, std::uint32_t{1} << (i - 1));
    }

    static MultilinearPoly monomial(int m, std::uint32_t mask) {
        MultilinearPoly p(m);
        if (mask >= (std::uint32_t{1} << m)) throw std::invalid_argument("monomial outside variable range");
        p.terms_.push_back(mask);
        return p;
    }

    int var_count() const { return m_; }
    const std::vector<std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool has_term(std::uint32_t mask) const {
        return std::binary_search(terms_.begin(), terms_.end(), mask);
    }

    // Add the monomial mod 2.
    void toggle_term(std::uint32_t mask) {
        if (mask >= (std::uint32_t{1} << m_)) throw std::invalid_argument("monomial outside variable range");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mask);
        if (it != terms_.end() && *it == mask)
            terms_.erase(it);
        else
            terms_.insert(it, mask);
    }

    // Maximum term degree; -1 stands in for -infinity on the zero polynomial.
    int degree() const {
        int d = -1;
        for (std::uint32_t t : terms_) d = std::max(d, monomial_degree(t));
        return d;
    }

    int min_term_degree() const {
        int d = m_ + 1;
        for (std::uint32_t t : terms_) d = std::min(d, monomial_degree(t));
        return terms_.empty() ? -1 : d;
    }

    MultilinearPoly& operator+=(const MultilinearPoly& other) {
        check_same_vars(other);
        for (std::uint32_t t : other.terms_) toggle_term(t);
        return *this;
    }

    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) {
        a += b;
        return a;
    }

    // Product with idempotent reduction: the product of two monomials is the
    // union of their masks, and equal results cancel mod 2. The degree of the
    // product can therefore be smaller than the sum of the degrees.
    MultilinearPoly operator*(const MultilinearPoly& other) const {
        check_same_vars(other);
        MultilinearPoly out(m_);
        for (std::uint32_t s : terms_)
            for (std::uint32_t t : other.terms_) out.toggle_term(s | t);
        return out;
    }

    bool evaluate_at(std::uint32_t point) const {
        bool acc = false;
        for (std::uint32_t t : terms_) acc ^= monomial_eval(t, point);
        return acc;
    }

    // Evaluation vector over all 2^m points in convention order.
    BitVec evaluate() const {
        const std::size_t n = std::size_t{1} << m_;
        BitVec v(n);
        for (std::size_t j = 0; j < n; ++j) v.set(j, evaluate_at(static_cast<std::uint32_t>(j)));
        return v;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::uint32_t> ordered = terms_;
        std::sort(ordered.begin(), ordered.end(), monomial_canonical_less);
        std::string s;
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            if (i) s += " + ";
            s += monomial_name(ordered[i]);
        }
        return s;
    }

    bool operator==(const MultilinearPoly&) const = default;

private:
    void check_same_vars(const MultilinearPoly& other) const {
        if (other.m_ != m_) throw std::invalid_argument("mismatched variable count");
    }

    int m_ = 0;
    std::vector<std::uint32_t> terms_;
};

}  // namespace rmpir
