#pragma once

#include "etaq/etaquot.hpp"
#include "etaq/numbers.hpp"

#include <vector>

namespace etaq {

enum class AdmissibleType { I, II };

struct AdmissibleRecord {
    EtaQuotient f;
    Rat k;
    long N;  // minimal level
    std::vector<Rat> x;  // cusp orders over the sorted divisors of N
    AdmissibleType type;
    Int dim;
    long n0;

    std::string json() const;
};

// Half-integral weights 1/2 <= k < 1 + 12/m + 18/sqrt(N), compared exactly.
std::vector<Rat> k_range(long N);

// Number of cusps at which the multiplier is trivial on the stabilizer,
// i.e. with x_c = 0 mod 24.
long n0_count(const EtaQuotient& f);

// Coarse pruning bound: true when no admissible eta-quotient of weight k and
// level N can exist.
bool not_admissible_bound(long N, const Rat& k);

struct SearchOptions {
    bool include_type_II = false;
    // also record the constant quotient (level 1, weight 0, dim M_0 = 1),
    // which sits below the k >= 1/2 enumeration window
    bool include_constant = false;
    int threads = 1;
};

// Exhaustive enumeration of admissible eta-quotients with the given minimal
// levels: nonnegative cusp-order vectors with weighted sum 2mk, inverted to
// exponents, filtered on integrality, minimal level, the dimension-formula
// condition, and the type test.  Every record is re-verified from scratch.
std::vector<AdmissibleRecord> search_admissible(const std::vector<long>& levels,
                                                const SearchOptions& opts = {});

}  // namespace etaq
