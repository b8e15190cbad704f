#pragma once

#include "etaq/numbers.hpp"

#include <complex>
#include <vector>

namespace etaq {

// Level-4 Eisenstein family attached to eta(tau)^(-2r2-4r4) eta(2tau)^r2 eta(4tau)^r4,
// defined at the infinite cusp for weight k = (-r2 - 3r4)/2 > 2.
struct EisParams {
    Rat r2, r4;
    long c_max = 2000;

    Rat weight() const { return (-r2 - 3 * r4) / 2; }
    long cover_index() const;
    // 0 <= -2r2-5r4 < 8, 0 <= -r4 < 8, (-2r2-5r4) + (-r4) > 8
    bool admissible_window() const;
};

// P(c4, d; r2, r4) in Dedekind sums, for 4 | c4 and (d, c4) = 1.
Rat p_factor(long c4, long d, const Rat& r2, const Rat& r4);

struct EisCoeff {
    std::complex<double> value;
    double tail_bound;  // crude bound on the truncated c-sum remainder
};

// Approximate n-th Fourier coefficient of the normalized Eisenstein series
// (n = 0 gives the exact constant term 1).
EisCoeff eis_coeff(const EisParams& params, long n, int threads = 1);

struct EisReportRow {
    long n;
    double series_value;
    std::complex<double> eis_value;
    double abs_err;
};

struct EisReport {
    std::vector<EisReportRow> rows;
    double max_err;
    bool pass;
};

// Compare the Eisenstein coefficients with the exact q-expansion of the
// eta-quotient for 1 <= n <= n_max.
EisReport verify_identity(const EisParams& params, long n_max, double tol, int threads = 1);

}  // namespace etaq
