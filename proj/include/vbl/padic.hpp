#pragma once

#include <string>
#include <vector>

#include "vbl/common.hpp"

namespace vbl {

// A p-adic number known to a guaranteed absolute precision.
//
// Forms:
//   zero + exact       : the number 0 itself (tail known to vanish forever)
//   zero + !exact      : a zero ball, "indistinguishable from 0 below p^prec"
//   resolved (!zero)   : v + little-endian base-p digits, digits[0] != 0.
//                        For inexact jets prec == v + digits.size() always.
//                        For exact jets the digits beyond the stored window
//                        are known to be zero, so the window may be extended
//                        on demand.
struct PadicJet {
    bool zero = true;
    bool exact = true;
    long long v = 0;
    std::vector<int> digits;
    long long prec = 0;  // absolute precision; ignored when exact

    bool is_zero() const { return zero; }
    bool is_exact_zero() const { return zero && exact; }
    bool is_zero_ball() const { return zero && !exact; }
    bool is_resolved() const { return !zero; }

    static PadicJet exact_zero() { return PadicJet{}; }
    static PadicJet zero_ball(long long prec) {
        PadicJet j;
        j.exact = false;
        j.prec = prec;
        return j;
    }

    long long rel_prec() const { return is_resolved() ? (long long)digits.size() : 0; }
};

// Exact truncated arithmetic for Q_p at a fixed prime and working precision.
// All values are immutable; every method is const and pure.
class PadicCtx {
public:
    PadicCtx(long long p, long long digits_of_precision);

    long long p() const { return p_; }
    long long precision() const { return n_; }

    // -- construction ------------------------------------------------------
    PadicJet from_rational(long long num, long long den) const;
    PadicJet from_integer(long long value) const { return from_rational(value, 1); }
    // Raw constructor used by enumeration and parsing. digits are little-endian
    // starting at valuation v; leading zeros are normalized away.
    PadicJet make(long long v, std::vector<int> digits, long long abs_prec, bool exact) const;

    // -- field operations --------------------------------------------------
    PadicJet add(const PadicJet& a, const PadicJet& b) const;
    PadicJet sub(const PadicJet& a, const PadicJet& b) const;
    PadicJet mul(const PadicJet& a, const PadicJet& b) const;
    PadicJet div(const PadicJet& a, const PadicJet& b) const;
    PadicJet neg(const PadicJet& a) const;
    // Multiply by p^j (exact, no precision loss).
    PadicJet shift(const PadicJet& a, long long j) const;
    PadicJet pow(const PadicJet& a, long long n) const;

    // -- valuation data ----------------------------------------------------
    long long valuation(const PadicJet& a) const;          // throws ValuationUndecidable on zero forms
    int angular_component(const PadicJet& a) const;        // leading digit
    // Unit part mod p^k as an integer in [0, p^k); -1 when the precision
    // cannot support k digits (only possible for inexact jets).
    long long unit_key(const PadicJet& a, long long k) const;
    // digit of the unit part at index i (0-based); requires availability.
    int unit_digit(const PadicJet& a, long long i) const;
    long long unit_digits_known(const PadicJet& a) const;  // how many unit digits are certain

    // -- power structure ---------------------------------------------------
    // Is the unit part of a an n-th power in Z_p^*? Decided via the residue
    // criterion: for odd p the Teichmueller component must be an n-th power
    // root of unity and the principal unit must lie in (1+pZ_p)^{p^s};
    // for p = 2 and even n the unit must be 1 mod 2^{s+2}.
    Tri unit_is_nth_power(const PadicJet& a, long long n) const;

    // Unique y with y^n = a and unit(y) = 1 mod p^k, for a with unit = 1 mod
    // p^{k + v_p(n)} and n | v(a); Newton iteration seeded at p^{v/n}.
    // Output carries v_p(n) fewer unit digits than the input.
    PadicJet nth_root(const PadicJet& a, long long n, long long k) const;

    // -- comparisons -------------------------------------------------------
    // Do a and b agree at every absolute index < upto?
    bool agree_to(const PadicJet& a, const PadicJet& b, long long upto) const;
    // Largest P such that both jets are defined below P (min of abs precs).
    long long common_prec(const PadicJet& a, const PadicJet& b) const;
    // Truncate to absolute precision P (resulting jet inexact unless a was
    // exact and unaffected).
    PadicJet truncate(const PadicJet& a, long long P) const;

    // -- rendering ---------------------------------------------------------
    std::string render(const PadicJet& a) const;

    long long v_p(long long n) const;  // p-adic valuation of a nonzero integer

private:
    long long p_;
    long long n_;

    long long abs_prec(const PadicJet& a) const;
    int digit_at(const PadicJet& a, long long idx) const;  // absolute index, 0 beyond exact window
    PadicJet from_window(long long lo, const std::vector<int>& window, long long hi, bool exact) const;
};

}  // namespace vbl
