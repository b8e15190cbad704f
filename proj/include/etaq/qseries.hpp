#pragma once

#include "etaq/etaquot.hpp"
#include "etaq/numbers.hpp"

#include <string>
#include <vector>

namespace etaq {

// Truncated formal series sum_{j=0..T} c_j q^(offset+j) with exact rational
// coefficients; T is the number of retained terms past the leading exponent.
class QSeries {
  public:
    QSeries() : offset_(0), c_{Rat(1)} {}
    QSeries(Rat offset, std::vector<Rat> coeffs);

    const Rat& offset() const { return offset_; }
    long precision() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Coefficient at rational exponent n.  Exponents at or below the precision
    // horizon that miss the support lattice give exact 0; beyond it, an error.
    Rat coefficient(const Rat& n) const;

    QSeries operator*(const QSeries& o) const;
    QSeries operator/(const QSeries& o) const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const Rat& s) const;

    QSeries truncated(long T) const;  // drop terms past T
    bool agrees_with(const QSeries& o) const;  // equal on the common window

    std::string json() const;

  private:
    Rat offset_;
    std::vector<Rat> c_;
};

// (1 + h)^r for a series with unit leading coefficient, via exp(r log(1+h)).
QSeries pow_rational(const QSeries& s, const Rat& r);

// q^(n/24) prod_{m>=1} (1 - q^(n m)), truncated after T terms.
QSeries eta_expansion(long n, long T);

// Exact expansion of an eta-quotient: integral exponents by sparse
// multiplication/division with the pentagonal-number polynomials, fractional
// exponents through the holomorphic branch with constant term 1.
QSeries expand(const EtaQuotient& f, long T);

// log / exp on unit series (constant term 1 resp. 0), standard derivative
// recurrences over Q; exposed for tests.
std::vector<Rat> log_unit_series(const std::vector<Rat>& u);
std::vector<Rat> exp_series(const std::vector<Rat>& g);

}  // namespace etaq
