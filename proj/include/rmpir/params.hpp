#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rmpir/errors.hpp"

namespace rmpir {

// Smallest e with 2^e >= x, for x >= 1.
inline int ceil_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("ceil_log2: argument must be positive");
    int e = 0;
    while ((std::uint64_t{1} << e) < x) ++e;
    return e;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// All protocol parameters of one scheme instance.
//
//   r   order of the storage code RM(r,m)
//   r'  order of the retrieval code RM(r',m), minimal for t-collusion
//   r_e largest degree whose coefficients survive both the interference
//       projection and the error-correction budget
//   t/a/b  collusion / unresponsive / Byzantine tolerances
//   rho    symbols recoverable per round
//   L/S    stripes per file and round count, chosen so L*k = S*rho
struct SchemeParams {
    int r = 0;
    int m = 0;
    int r_prime = 0;
    int r_e = 0;
    int t = 0;
    int a = 0;
    int b = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t rho = 0;
    std::size_t L = 0;
    std::size_t S = 0;

    std::size_t file_bits() const { return L * k; }
};

struct FeasibilityResult {
    bool ok = false;
    std::string violated;  // name of the first failing inequality, empty when ok
    int r_prime = 0;
    int r_e = 0;
};

// Evaluate the scheme inequalities at a given storage code RM(r,m) and
// tolerance triple. The retrieval order and retriever degree are fixed by the
// ceiled formulas: r' = ceil(log2(t+1)) - 1 and r_e = m - r - ceil(log2(a+2b+1)).
inline FeasibilityResult check_feasibility(int r, int m, int t, int a, int b) {
    if (r < 0) throw std::invalid_argument("check_feasibility: r must be nonnegative");
    if (t < 1) throw std::invalid_argument("check_feasibility: t must be at least 1");
    if (a < 0 || b < 0) throw std::invalid_argument("check_feasibility: a and b must be nonnegative");
    if (m < 1) throw std::invalid_argument("check_feasibility: m must be positive");

    FeasibilityResult res;
    res.r_prime = ceil_log2(static_cast<std::uint64_t>(t) + 1) - 1;
    res.r_e = m - r - ceil_log2(static_cast<std::uint64_t>(a) + 2 * static_cast<std::uint64_t>(b) + 1);

    if (res.r_e < res.r_prime + 1) {
        res.violated = "retriever degree window: r_e >= r' + 1";
        return res;
    }
    // Nesting of information sets needs r + r_e <= m - r - r' - 1, which with
    // the ceiled choices is ceil(log2(a+2b+1)) - ceil(log2(t+1)) >= r.
    if (r + res.r_e > m - r - res.r_prime - 1) {
        res.violated = "decodability: r + r_e <= m - r - r' - 1 (log2(a+2b+1) - log2(t+1) >= r)";
        return res;
    }
    res.ok = true;
    return res;
}

namespace detail {

inline SchemeParams fill_derived(int r, int m, int t, int a, int b, const FeasibilityResult& feas) {
    SchemeParams p;
    p.r = r;
    p.m = m;
    p.r_prime = feas.r_prime;
    p.r_e = feas.r_e;
    p.t = t;
    p.a = a;
    p.b = b;
    p.n = std::size_t{1} << m;
    p.k = 0;
    for (int i = 0; i <= r; ++i) p.k += binomial(m, i);
    p.rho = 0;
    for (int i = p.r_prime + 1; i <= p.r_e; ++i) p.rho += binomial(m, r + i);
    const std::size_t l = std::lcm(p.rho, p.k);
    p.L = l / p.k;
    p.S = l / p.rho;
    return p;
}

}  // namespace detail

// Parameters for a fixed storage code RM(r,m); throws InfeasibleParams naming
// the violated inequality.
inline SchemeParams params_for_code(int r, int m, int t, int a, int b) {
    FeasibilityResult feas = check_feasibility(r, m, t, a, b);
    if (!feas.ok)
        throw InfeasibleParams(feas.violated, "r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                                  " t=" + std::to_string(t) + " a=" + std::to_string(a) +
                                                  " b=" + std::to_string(b));
    return detail::fill_derived(r, m, t, a, b, feas);
}

// Parameters with the minimal server count:
// m = r + ceil(log2((t+1)(a+2b+1))).
inline SchemeParams derive_params(int r, int t, int a, int b) {
    if (r < 0) throw std::invalid_argument("derive_params: r must be nonnegative");
    if (t < 1) throw std::invalid_argument("derive_params: t must be at least 1");
    if (a < 0 || b < 0) throw std::invalid_argument("derive_params: a and b must be nonnegative");
    const std::uint64_t product =
        (static_cast<std::uint64_t>(t) + 1) * (static_cast<std::uint64_t>(a) + 2 * static_cast<std::uint64_t>(b) + 1);
    const int m = r + ceil_log2(product);
    return params_for_code(r, m, t, a, b);
}

inline bool is_example1(const SchemeParams& p) { return p.r == 1 && p.t == 1 && p.a == 1 && p.b == 1; }

}  // namespace rmpir
