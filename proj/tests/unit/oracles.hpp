#pragma once

// Independent checks used by the construction and verification tests. They
// only touch raw field arithmetic and generator matrices.
#include <algorithm>
#include <cstdint>

#include "duadic/code.hpp"

namespace oracle {

using duadic::Elem;
using duadic::Field;
using duadic::LinearCode;

inline std::uint32_t brute_distance(const LinearCode& c) {
    const Field& f = *c.field();
    const std::size_t k = c.k(), n = c.n();
    std::vector<Elem> msg(k, 0);
    std::uint32_t best = static_cast<std::uint32_t>(n);
    while (true) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Elem x = 0;
            for (std::size_t r = 0; r < k; ++r) x = f.add(x, f.mul(msg[r], c.genmat().at(r, j)));
            w += x != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

// G * G^T == 0, or G * conj(G)^T with conj x -> x^e for the Hermitian form.
inline bool gram_zero(const LinearCode& c, std::uint64_t conj_exp = 1) {
    const Field& f = *c.field();
    const auto& G = c.genmat();
    for (std::size_t a = 0; a < G.rows; ++a) {
        for (std::size_t b = 0; b < G.rows; ++b) {
            Elem s = 0;
            for (std::size_t j = 0; j < G.cols; ++j) s = f.add(s, f.mul(G.at(a, j), f.pow(G.at(b, j), conj_exp)));
            if (s != 0) return false;
        }
    }
    return true;
}

inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t x = a % m, k = 1;
    while (x != 1 % m) {
        x = x * (a % m) % m;
        ++k;
    }
    return k;
}

}  // namespace oracle
