#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rmpir/errors.hpp"
#include "rmpir/rm_code.hpp"

namespace rmpir {

// Reed's majority-logic decoder for RM(r,m).
//
// Coefficients are recovered top degree first. For a monomial t of the
// current degree d, the received word is summed over each of the 2^{m-d}
// subcubes {points agreeing with a fixed assignment on the variables outside
// t}; for the residual codeword (all higher-degree terms already peeled off)
// every such parity equals the coefficient of t, and each corrupted position
// falls into exactly one subcube. The majority over the 2^{m-d} votes is
// therefore correct as long as fewer than 2^{m-d-1} errors remain, which at
// the top level is the bounded-distance radius 2^{m-r-1} - 1. After a degree
// level is decided, the evaluations of its recovered monomials are subtracted
// and the next level proceeds the same way.
//
// Ties vote zero; under the decoding radius no tie can occur.
inline MultilinearPoly majority_decode(const BitVec& word, int r, int m) {
    const std::size_t n = std::size_t{1} << m;
    if (word.size() != n) throw std::invalid_argument("majority_decode: word length mismatch");
    BitVec work = word;
    MultilinearPoly result(m);
    const std::uint32_t full = static_cast<std::uint32_t>(n - 1);
    for (int d = r; d >= 0; --d) {
        std::vector<std::uint32_t> recovered;
        for (std::uint32_t t : monomials_of_degree(m, d)) {
            const std::uint32_t comp = full & ~t;
            std::size_t ones = 0;
            std::size_t votes = 0;
            // beta runs over all subsets of comp, alpha over all subsets of t.
            std::uint32_t beta = 0;
            while (true) {
                bool parity = false;
                std::uint32_t alpha = 0;
                while (true) {
                    parity ^= work.get(beta | alpha);
                    if (alpha == t) break;
                    alpha = (alpha - t) & t;  // next subset of t
                }
                if (parity) ++ones;
                ++votes;
                if (beta == comp) break;
                beta = (beta - comp) & comp;  // next subset of comp
            }
            if (2 * ones > votes) recovered.push_back(t);
        }
        for (std::uint32_t t : recovered) {
            result.toggle_term(t);
            for (std::size_t j = 0; j < n; ++j)
                if (monomial_eval(t, static_cast<std::uint32_t>(j))) work.flip(j);
        }
    }
    return result;
}

// Bounded-distance error-and-erasure decoder. Requires
// |erasures| + 2*b_max < d_min; the word's bits at erased positions are
// ignored. Every filling of the erased positions is tried, each candidate is
// majority-decoded, and a candidate is accepted when its re-encoding is
// within b_max of the word on the non-erased positions. Two distinct
// codewords can never both pass (they would be within a + 2b < d_min of each
// other), so the accepted candidate is unique.
inline MultilinearPoly decode(const BitVec& word, const RMCode& code, const std::vector<std::size_t>& erasures,
                              std::size_t b_max) {
    if (word.size() != code.n) throw std::invalid_argument("decode: word length mismatch");
    if (erasures.size() >= 30) throw std::invalid_argument("decode: too many erasures to enumerate");
    if (erasures.size() + 2 * b_max >= code.d_min)
        throw std::invalid_argument("decode: erasure/error budget exceeds code distance");
    for (std::size_t e : erasures)
        if (e >= code.n) throw std::invalid_argument("decode: erasure index out of range");

    BitVec erased_mask(code.n);
    for (std::size_t e : erasures) erased_mask.set(e, true);

    std::optional<MultilinearPoly> accepted;
    const std::size_t fills = std::size_t{1} << erasures.size();
    for (std::size_t fill = 0; fill < fills; ++fill) {
        BitVec trial = word;
        for (std::size_t i = 0; i < erasures.size(); ++i) trial.set(erasures[i], (fill >> i) & 1);
        MultilinearPoly candidate = majority_decode(trial, code.r, code.m);
        BitVec re = candidate.evaluate();
        std::size_t dist = 0;
        for (std::size_t j = 0; j < code.n; ++j)
            if (!erased_mask.get(j) && re.get(j) != word.get(j)) ++dist;
        if (dist <= b_max) {
            if (accepted && !(*accepted == candidate))
                throw DecodingFailure("decode: conflicting candidates within budget");
            accepted = std::move(candidate);
        }
    }
    if (!accepted) throw DecodingFailure("decode: no codeword within the error/erasure budget");
    return *accepted;
}

}  // namespace rmpir
