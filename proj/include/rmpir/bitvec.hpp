#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmpir {

// Fixed-length vector over GF(2), bit-packed into 64-bit words.
// All mutators keep the bits beyond `size()` zero, so whole-word operations
// (equality, weight, dot) never see garbage.
class BitVec {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_bits(std::initializer_list<int> bits) {
        BitVec v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & std::uint64_t{1};
    }

    void set(std::size_t i, bool value) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    void xor_with(const BitVec& other) {
        if (other.len_ != len_) throw std::invalid_argument("BitVec length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    std::size_t weight() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    // GF(2) inner product: parity of the componentwise AND.
    bool dot(const BitVec& other) const {
        if (other.len_ != len_) throw std::invalid_argument("BitVec length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return (std::popcount(acc) & 1) != 0;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !is_zero(); }

    // Index of the lowest set bit, or npos.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    // Hamming distance restricted to positions not in `skip` (must be sorted or not; linear scan).
    std::size_t distance(const BitVec& other) const {
        if (other.len_ != len_) throw std::invalid_argument("BitVec length mismatch");
        std::size_t total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            total += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
        return total;
    }

    bool operator==(const BitVec&) const = default;

    std::string to_string() const {
        std::string s;
        s.reserve(len_);
        for (std::size_t i = 0; i < len_; ++i) s.push_back(get(i) ? '1' : '0');
        return s;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVec index " + std::to_string(i) + " out of range");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rmpir
