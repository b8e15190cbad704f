#pragma once

#include "etaq/ntheory.hpp"

#include <random>

namespace etaq::testing {

// Random word in T and S (SL2(Z)).
inline SL2Matrix random_sl2_word(std::mt19937& rng, int max_len = 20) {
    SL2Matrix g = sl2_identity();
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, 2);
    std::uniform_int_distribution<int> shift(-3, 3);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (gen(rng)) {
            case 0: {
                int t = shift(rng);
                g = g * SL2Matrix(1, t, 0, 1);
                break;
            }
            case 1:
                g = g * sl2_S();
                break;
            default:
                g = g * sl2_neg_identity();
                break;
        }
    }
    return g;
}

// Random word in T, V_N = (1 0; N 1) and -I (a subgroup of Gamma_0(N)).
inline SL2Matrix random_gamma0_word(std::mt19937& rng, long N, int max_len = 30) {
    SL2Matrix g = sl2_identity();
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> gen(0, 2);
    std::uniform_int_distribution<int> shift(-2, 2);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (gen(rng)) {
            case 0: {
                int t = shift(rng);
                g = g * SL2Matrix(1, t, 0, 1);
                break;
            }
            case 1: {
                int t = shift(rng);
                g = g * SL2Matrix(1, 0, Int(N) * t, 1);
                break;
            }
            default:
                g = g * sl2_neg_identity();
                break;
        }
    }
    return g;
}

}  // namespace etaq::testing
