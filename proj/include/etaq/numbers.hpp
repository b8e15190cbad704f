#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaq {

using Int = mpz_class;
using Rat = mpq_class;

// Errors used across the library.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct not_applicable_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct out_of_precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
inline void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// [x] for rational x (largest integer not exceeding x).
inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}
// {x} = x - [x].
inline Rat rat_frac(const Rat& x) {
    Rat f = x - Rat(rat_floor(x));
    f.canonicalize();
    return f;
}
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long to_long(const Int& a) {
    internal_check(a.fits_slong_p(), "integer does not fit in machine long");
    return a.get_si();
}

inline Rat make_rat(const Int& num, const Int& den) {
    check(den != 0, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parse "p/q" or "p" into an exact rational.
inline Rat parse_rational(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw parse_error("malformed rational '" + text + "'", 0);
    check(r.get_den() != 0, "zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace etaq
