#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rmpir/bitmatrix.hpp"
#include "rmpir/multilinear.hpp"

namespace rmpir {

// Binary Reed-Muller code RM(r,m): evaluations of all m-variate multilinear
// polynomials of degree <= r over the 2^m points. Generator rows follow the
// canonical monomial order (degree ascending, mask ascending), so row i is
// the evaluation vector of monomials[i].
struct RMCode {
    int r = 0;
    int m = 0;
    std::size_t n = 0;      // 2^m
    std::size_t k = 0;      // sum_{i<=r} C(m,i)
    std::size_t d_min = 0;  // 2^{m-r}
    std::vector<std::uint32_t> monomials;
    BitMatrix generator;
};

inline RMCode rm_code(int r, int m) {
    if (m < 1 || m > 30) throw std::invalid_argument("rm_code: variable count out of range");
    if (r < 0 || r > m) throw std::invalid_argument("rm_code: order must satisfy 0 <= r <= m");
    RMCode c;
    c.r = r;
    c.m = m;
    c.n = std::size_t{1} << m;
    c.d_min = std::size_t{1} << (m - r);
    c.monomials = monomials_up_to_degree(m, r);
    c.k = c.monomials.size();
    c.generator = BitMatrix(c.k, c.n);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (monomial_eval(c.monomials[i], static_cast<std::uint32_t>(j))) c.generator.set(i, j, true);
    return c;
}

// RM(r,m)^perp = RM(m-r-1, m). The dual of the full code RM(m,m) is the zero
// code, which has no RMCode value; nullopt stands for it.
inline std::optional<RMCode> dual(const RMCode& c) {
    if (c.r == c.m) return std::nullopt;
    return rm_code(c.m - c.r - 1, c.m);
}

// Row-reduced generator of the span of all componentwise products of
// codewords, computed from pairwise products of generator rows.
inline BitMatrix star_product_span(const RMCode& c1, const RMCode& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("star_product_span: length mismatch");
    BitMatrix products(0, c1.n);
    for (std::size_t i = 0; i < c1.k; ++i) {
        for (std::size_t j = 0; j < c2.k; ++j) {
            BitVec p(c1.n);
            for (std::size_t col = 0; col < c1.n; ++col)
                p.set(col, c1.generator.get(i, col) && c2.generator.get(j, col));
            products.append_row(std::move(p));
        }
    }
    return row_space_canonical(products);
}

inline bool contains(const RMCode& c, const BitVec& word) { return in_row_space(c.generator, word); }

inline BitVec encode(const RMCode& c, const BitVec& message) {
    if (message.size() != c.k) throw std::invalid_argument("encode: message length mismatch");
    BitVec word(c.n);
    for (std::size_t i = 0; i < c.k; ++i)
        if (message.get(i)) word.xor_with(c.generator.row(i));
    return word;
}

inline MultilinearPoly message_poly(const RMCode& c, const BitVec& message) {
    if (message.size() != c.k) throw std::invalid_argument("message_poly: message length mismatch");
    MultilinearPoly p(c.m);
    for (std::size_t i = 0; i < c.k; ++i)
        if (message.get(i)) p.toggle_term(c.monomials[i]);
    return p;
}

// An information set of the inner code together with an information set of
// the outer code containing it. Both are found greedily lowest index first;
// existence follows from the nesting of the codes.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> nested_information_set(const RMCode& inner,
                                                                                            const RMCode& outer) {
    if (inner.m != outer.m) throw std::invalid_argument("nested_information_set: variable count mismatch");
    if (inner.r > outer.r) throw std::invalid_argument("nested_information_set: inner order exceeds outer order");
    std::vector<std::size_t> inner_set = find_information_set(inner.generator);

    // Start from the inner set (its columns are independent in the outer
    // generator because the outer code projects onto them surjectively) and
    // extend column by column.
    auto outer_column = [&](std::size_t j) {
        BitVec col(outer.k);
        for (std::size_t rb = 0; rb < outer.k; ++rb) col.set(rb, outer.generator.get(rb, j));
        return col;
    };
    BitMatrix selected(0, outer.k);
    std::vector<std::size_t> outer_set = inner_set;
    for (std::size_t j : inner_set) selected.append_row(outer_column(j));
    std::size_t current_rank = rank(selected);
    if (current_rank != inner_set.size())
        throw std::logic_error("nested_information_set: inner set not independent in outer code");
    for (std::size_t j = 0; j < outer.n && outer_set.size() < outer.k; ++j) {
        BitMatrix trial = selected;
        trial.append_row(outer_column(j));
        if (rank(trial) > current_rank) {
            outer_set.push_back(j);
            selected = std::move(trial);
            ++current_rank;
        }
    }
    if (outer_set.size() != outer.k) throw std::logic_error("nested_information_set: extension failed");
    std::sort(outer_set.begin(), outer_set.end());
    return {inner_set, outer_set};
}

// Point permutation induced by the affine map z -> A.z + b. Entry j (0-based)
// is the index of A.P_{j+1} + b, so applying the permutation to an evaluation
// vector of f yields the evaluation vector of f composed with the map.
inline std::vector<std::size_t> affine_automorphism(const BitMatrix& a, const BitVec& b) {
    const std::size_t m = a.rows();
    if (a.cols() != m) throw std::invalid_argument("affine_automorphism: matrix must be square");
    if (b.size() != m) throw std::invalid_argument("affine_automorphism: offset length mismatch");
    if (rank(a) != m) throw std::invalid_argument("affine_automorphism: singular map");
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t image = 0;
        for (std::size_t i = 0; i < m; ++i) {
            bool bit = b.get(i);
            for (std::size_t c = 0; c < m; ++c)
                if (a.get(i, c)) bit ^= ((j >> c) & 1) != 0;
            if (bit) image |= std::uint32_t{1} << i;
        }
        perm[j] = image;
    }
    return perm;
}

inline BitVec permute(const BitVec& word, const std::vector<std::size_t>& perm) {
    BitVec out(word.size());
    for (std::size_t j = 0; j < word.size(); ++j) out.set(j, word.get(perm[j]));
    return out;
}

}  // namespace rmpir
