#pragma once

#include "etaq/cyclo.hpp"
#include "etaq/etaquot.hpp"
#include "etaq/qseries.hpp"

#include <map>
#include <vector>

namespace etaq {

// Everything the coefficient action of T_l needs about an eta-quotient.
struct HeckeContext {
    EtaQuotient f;  // normalized to its minimal level
    HeckeStats stats;
    Rat k;

    explicit HeckeContext(const EtaQuotient& quotient);
};

// Compatibility of T_l between the characters of two integral exponent
// vectors of equal weight: the two 24-congruences plus the square condition
// on l^(2|k'|) times the odd-difference product.
bool compatible(const Int& l, const std::map<long, Rat>& r, const std::map<long, Rat>& rp, long N);

// The root-of-unity factor psi_{l,r}(a,b) of the coefficient action.
UnityRoot psi_factor(const HeckeContext& ctx, const Int& l, const Int& a, const Int& b);

// c_{T_l f}(n) from the coefficients of f, evaluated exactly.  Coefficients
// of f off the support lattice or below the leading exponent count as zero.
Cyclotomic hecke_coeff(const HeckeContext& ctx, const QSeries& f_series, const Int& l, const Rat& n);

// Eigenvalue c_l = c_{T_l f}(x_N/24), using c_f(x_N/24) = 1.
Cyclotomic eigenvalue(const HeckeContext& ctx, const QSeries& f_series, const Int& l);

// Closed form for c_f(l) when x_N = 0, l in L_f, no prime outside N divides l
// twice, and l or N is odd.
Cyclotomic closed_coeff(const HeckeContext& ctx, const Int& l);

// sum_{0 <= b < a} (b/a) e(tb/a) for odd a: zero unless irad(a) | t, else the
// eps_a closed form over the rad-decomposition of a.
Cyclotomic gauss_sum(const Int& a, const Int& t);
Cyclotomic gauss_sum_direct(const Int& a, const Int& t);

// Truncated series with exact cyclotomic coefficients (offset + j lattice).
struct CycSeries {
    Rat offset;
    std::vector<Cyclotomic> c;

    long precision() const { return static_cast<long>(c.size()) - 1; }
    Cyclotomic coefficient(const Rat& n) const;
    static CycSeries from(const QSeries& s);
};

// The double-coset operator in its defining form: auxiliary x, y, z chosen per
// (a, b, d) and both character factors evaluated on the double cover.  The
// characters are those of the integral exponent vectors r (source) and rp
// (target) at level N.  selection picks between two valid (x, y, z) rules;
// the result is provably independent of it, which the tests exercise.
CycSeries hecke_general(const CycSeries& f_series, const Int& l, const std::map<long, Rat>& r,
                        const std::map<long, Rat>& rp, long N, int selection = 0);

// c_{l1} c_{l2} = c_{l1 l2} for coprime l1, l2 in L_f.
bool multiplicativity_check(const HeckeContext& ctx, const QSeries& f_series, const Int& l1,
                            const Int& l2);

// T_{l2; r', r''} T_{l1; r, r'} = T_{l1 l2; r, r''} on the common window.
bool composition_check(const CycSeries& f_series, const Int& l1, const Int& l2,
                       const std::map<long, Rat>& r, const std::map<long, Rat>& rp,
                       const std::map<long, Rat>& rpp, long N);

}  // namespace etaq
