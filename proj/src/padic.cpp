#include "vbl/padic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace vbl {
namespace {

constexpr long long kInfPrec = LLONG_MAX / 4;
constexpr long long kWindowGuard = 1 << 20;

using W = std::vector<int>;

bool w_is_zero(const W& w) {
    for (int d : w)
        if (d != 0) return true ? false : false;
    return true;
}

long long w_first_nonzero(const W& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) return (long long)i;
    return -1;
}

W w_add(const W& a, const W& b, long long p, size_t m) {
    W r(m, 0);
    long long carry = 0;
    for (size_t i = 0; i < m; ++i) {
        long long s = carry + (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = (int)(s % p);
        carry = s / p;
    }
    return r;
}

// (a - b) mod p^m; a borrow past the top wraps, which is the correct residue.
W w_sub(const W& a, const W& b, long long p, size_t m) {
    W r(m, 0);
    long long borrow = 0;
    for (size_t i = 0; i < m; ++i) {
        long long s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = 0;
        while (s < 0) {
            s += p;
            borrow++;
        }
        r[i] = (int)s;
    }
    return r;
}

W w_mul(const W& a, const W& b, long long p, size_t m) {
    std::vector<long long> acc(m, 0);
    for (size_t i = 0; i < a.size() && i < m; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j + i < m && j < b.size(); ++j) acc[i + j] += (long long)a[i] * b[j];
    }
    W r(m, 0);
    long long carry = 0;
    for (size_t i = 0; i < m; ++i) {
        long long s = acc[i] + carry;
        long long d = s % p;
        r[i] = (int)d;
        carry = s / p;
    }
    return r;
}

int inv_mod_p(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p;
    return (int)t;
}

// Inverse of a unit digit window mod p^m by Newton doubling.
W w_inv(const W& u, long long p, size_t m) {
    W x{inv_mod_p(u.empty() ? 0 : u[0], p)};
    size_t len = 1;
    while (len < m) {
        size_t nl = std::min(m, len * 2);
        W t = w_mul(u, x, p, nl);
        // x <- x * (2 - u*x)
        W two(nl, 0);
        long long rem = 2;
        for (size_t i = 0; i < nl && rem > 0; ++i) {
            two[i] = (int)(rem % p);
            rem /= p;
        }
        W corr = w_sub(two, t, p, nl);
        x = w_mul(x, corr, p, nl);
        len = nl;
    }
    x.resize(m, 0);
    return x;
}

W w_pow(W base, unsigned long long e, long long p, size_t m) {
    W r(m, 0);
    r[0] = 1;
    base.resize(m, 0);
    while (e > 0) {
        if (e & 1ULL) r = w_mul(r, base, p, m);
        base = w_mul(base, base, p, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

PadicCtx::PadicCtx(long long p, long long digits_of_precision) : p_(p), n_(digits_of_precision) {
    if (!is_prime_i64(p)) fail(Err::NotPrime, "p must be prime, got " + std::to_string(p));
    if (n_ < 4) fail(Err::BadPrecision, "working precision must be at least 4 digits");
}

long long PadicCtx::v_p(long long n) const {
    if (n == 0) fail(Err::ValuationUndecidable, "v_p(0)");
    if (n < 0) n = -n;
    long long v = 0;
    while (n % p_ == 0) {
        n /= p_;
        v++;
    }
    return v;
}

long long PadicCtx::abs_prec(const PadicJet& a) const { return a.exact ? kInfPrec : a.prec; }

int PadicCtx::digit_at(const PadicJet& a, long long idx) const {
    if (a.zero) {
        if (a.exact || idx < a.prec) return 0;
        fail(Err::PrecisionExhausted, "digit beyond zero-ball precision");
    }
    if (idx < a.v) return 0;
    long long off = idx - a.v;
    if (off < (long long)a.digits.size()) return a.digits[(size_t)off];
    if (a.exact) return 0;
    fail(Err::PrecisionExhausted, "digit beyond jet precision");
}

PadicJet PadicCtx::from_window(long long lo, const std::vector<int>& window, long long hi,
                               bool exact) const {
    long long fz = w_first_nonzero(window);
    long long span = hi - lo;
    if (fz < 0 || fz >= span) {
        if (exact) return PadicJet::exact_zero();
        return PadicJet::zero_ball(hi);
    }
    PadicJet j;
    j.zero = false;
    j.exact = exact;
    j.v = lo + fz;
    j.digits.assign(window.begin() + fz, window.begin() + (size_t)span);
    if (exact) {
        while (!j.digits.empty() && j.digits.back() == 0) j.digits.pop_back();
    }
    j.prec = hi;
    return j;
}

PadicJet PadicCtx::make(long long v, std::vector<int> digits, long long abs_prec, bool exact) const {
    for (int d : digits)
        if (d < 0 || d >= p_) fail(Err::SyntaxError, "digit out of range");
    long long span = abs_prec - v;
    if (!exact) {
        if (span < 0) fail(Err::BadPrecision, "absolute precision below valuation");
        digits.resize((size_t)std::max(0LL, span), 0);
    }
    return from_window(v, digits, exact ? v + (long long)digits.size() : abs_prec, exact);
}

PadicJet PadicCtx::from_rational(long long num, long long den) const {
    if (den == 0) fail(Err::ZeroDenominator, "from_rational: zero denominator");
    if (num == 0) return PadicJet::exact_zero();
    constexpr long long kInputCap = 1LL << 56;
    if (std::llabs(num) > kInputCap || std::llabs(den) > kInputCap)
        fail(Err::Unsupported, "from_rational: input magnitude too large");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    long long v = 0;
    while (num % p_ == 0) {
        num /= p_;
        v++;
    }
    while (den % p_ == 0) {
        den /= p_;
        v--;
    }
    int ib = inv_mod_p(den % p_, p_);
    std::vector<int> digits;
    digits.reserve((size_t)n_);
    long long a = num;
    for (long long i = 0; i < n_; ++i) {
        long long am = a % p_;
        if (am < 0) am += p_;
        int d = (int)((__int128)am * ib % p_);
        digits.push_back(d);
        a = (a - (long long)d * den) / p_;
    }
    bool exact = (a == 0);
    PadicJet j;
    j.zero = false;
    j.exact = exact;
    j.v = v;
    j.digits = std::move(digits);
    if (exact) {
        while (!j.digits.empty() && j.digits.back() == 0) j.digits.pop_back();
    }
    j.prec = v + n_;
    return j;
}

PadicJet PadicCtx::add(const PadicJet& a, const PadicJet& b) const {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    if (a.zero && b.zero) return PadicJet::zero_ball(std::min(a.prec, b.prec));
    if (a.zero) return add(b, a);
    if (b.zero) {
        // a resolved, b a zero ball: known digits of a survive below b.prec.
        long long P = std::min(abs_prec(a), b.prec);
        if (a.v >= P) return PadicJet::zero_ball(P);
        W w((size_t)(P - a.v));
        for (long long i = 0; i < P - a.v; ++i) w[(size_t)i] = digit_at(a, a.v + i);
        return from_window(a.v, w, P, false);
    }
    bool exact = a.exact && b.exact;
    long long lo = std::min(a.v, b.v);
    long long hi;
    if (exact) {
        hi = std::max(a.v + (long long)a.digits.size(), b.v + (long long)b.digits.size()) + 1;
    } else {
        hi = std::min(abs_prec(a), abs_prec(b));
        if (hi <= lo) return PadicJet::zero_ball(hi);
    }
    if (hi - lo > kWindowGuard) fail(Err::Unsupported, "window too large");
    W w((size_t)(hi - lo), 0);
    long long carry = 0;
    for (long long i = lo; i < hi; ++i) {
        long long s = carry + digit_at(a, i) + digit_at(b, i);
        w[(size_t)(i - lo)] = (int)(s % p_);
        carry = s / p_;
    }
    return from_window(lo, w, hi, exact);
}

PadicJet PadicCtx::sub(const PadicJet& a, const PadicJet& b) const {
    if (b.is_exact_zero()) return a;
    if (a.zero && b.zero) {
        if (a.exact && b.exact) return PadicJet::exact_zero();
        long long P = std::min(abs_prec(a), abs_prec(b));
        return PadicJet::zero_ball(P);
    }
    if (b.zero || a.zero) {
        // One operand is a ball around zero; digit knowledge is symmetric.
        const PadicJet& r = a.zero ? b : a;
        const PadicJet& z = a.zero ? a : b;
        long long P = std::min(abs_prec(r), abs_prec(z));
        if (r.v >= P) return PadicJet::zero_ball(P);
        W w((size_t)(P - r.v));
        if (a.zero) {
            // 0-ball minus resolved: negate r on the window.
            long long borrow = 0;
            for (long long i = r.v; i < P; ++i) {
                long long s = -digit_at(r, i) - borrow;
                borrow = 0;
                while (s < 0) {
                    s += p_;
                    borrow++;
                }
                w[(size_t)(i - r.v)] = (int)s;
            }
        } else {
            for (long long i = r.v; i < P; ++i) w[(size_t)(i - r.v)] = digit_at(r, i);
        }
        return from_window(r.v, w, P, false);
    }
    bool exact = a.exact && b.exact;
    long long lo = std::min(a.v, b.v);
    long long hi;
    if (exact)
        hi = std::max(a.v + (long long)a.digits.size(), b.v + (long long)b.digits.size());
    else {
        hi = std::min(abs_prec(a), abs_prec(b));
        if (hi <= lo) return PadicJet::zero_ball(hi);
    }
    if (hi - lo > kWindowGuard) fail(Err::Unsupported, "window too large");
    auto run = [&](long long top, bool* borrowed_out) {
        W w((size_t)(top - lo), 0);
        long long borrow = 0;
        for (long long i = lo; i < top; ++i) {
            long long s = digit_at(a, i) - digit_at(b, i) - borrow;
            borrow = 0;
            while (s < 0) {
                s += p_;
                borrow++;
            }
            w[(size_t)(i - lo)] = (int)s;
        }
        *borrowed_out = borrow != 0;
        return w;
    };
    bool borrowed = false;
    W w = run(hi, &borrowed);
    if (exact && !borrowed) return from_window(lo, w, hi, true);
    if (exact && borrowed) {
        // Negative exact difference: the expansion does not terminate, so
        // materialize a full working-precision window and drop exactness.
        long long hi2 = hi + n_;
        w = run(hi2, &borrowed);
        return from_window(lo, w, hi2, false);
    }
    return from_window(lo, w, hi, false);
}

PadicJet PadicCtx::neg(const PadicJet& a) const { return sub(PadicJet::exact_zero(), a); }

PadicJet PadicCtx::mul(const PadicJet& a, const PadicJet& b) const {
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicJet::exact_zero();
    if (a.zero && b.zero) return PadicJet::zero_ball(a.prec + b.prec);
    if (a.zero) return PadicJet::zero_ball(a.prec + b.v);
    if (b.zero) return PadicJet::zero_ball(a.v + b.prec);
    long long v = a.v + b.v;
    bool exact = a.exact && b.exact;
    const long long exact_cap = std::max(n_, 96LL);
    long long m;
    if (exact) {
        m = (long long)(a.digits.size() + b.digits.size());
        if (m > exact_cap) {
            m = exact_cap;
            exact = false;
        }
    } else {
        long long ma = a.exact ? kInfPrec : (long long)a.digits.size();
        long long mb = b.exact ? kInfPrec : (long long)b.digits.size();
        m = std::min(ma, mb);
    }
    W w = w_mul(a.digits, b.digits, p_, (size_t)m);
    return from_window(v, w, v + m, exact);
}

PadicJet PadicCtx::div(const PadicJet& a, const PadicJet& b) const {
    if (b.zero) fail(Err::DivisionUndecidable, "divisor not certified nonzero");
    if (a.is_exact_zero()) return PadicJet::exact_zero();
    if (a.zero) return PadicJet::zero_ball(a.prec - b.v);
    long long ma = a.exact ? n_ : (long long)a.digits.size();
    long long mb = b.exact ? n_ : (long long)b.digits.size();
    long long m = std::min(ma, mb);
    W ua = a.digits;
    ua.resize((size_t)m, 0);
    W ub = b.digits;
    ub.resize((size_t)m, 0);
    W q = w_mul(ua, w_inv(ub, p_, (size_t)m), p_, (size_t)m);
    long long v = a.v - b.v;
    return from_window(v, q, v + m, false);
}

PadicJet PadicCtx::shift(const PadicJet& a, long long j) const {
    PadicJet r = a;
    r.v += j;
    r.prec += j;
    if (r.zero && r.exact) r.prec = 0;
    return r;
}

PadicJet PadicCtx::pow(const PadicJet& a, long long n) const {
    if (n < 0) fail(Err::Unsupported, "negative jet power");
    PadicJet r = from_integer(1);
    PadicJet base = a;
    long long e = n;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        if (e >>= 1) base = mul(base, base);
    }
    return r;
}

long long PadicCtx::valuation(const PadicJet& a) const {
    if (a.zero) fail(Err::ValuationUndecidable, "valuation of a zero form is only bounded below");
    return a.v;
}

int PadicCtx::angular_component(const PadicJet& a) const {
    if (a.zero) fail(Err::ValuationUndecidable, "angular component needs a resolved jet");
    return a.digits[0];
}

long long PadicCtx::unit_digits_known(const PadicJet& a) const {
    if (a.zero) return 0;
    return a.exact ? kInfPrec : (long long)a.digits.size();
}

int PadicCtx::unit_digit(const PadicJet& a, long long i) const {
    if (a.zero) fail(Err::ValuationUndecidable, "unit digit of a zero form");
    return digit_at(a, a.v + i);
}

long long PadicCtx::unit_key(const PadicJet& a, long long k) const {
    if (a.zero) fail(Err::ValuationUndecidable, "unit key of a zero form");
    if (unit_digits_known(a) < k) return -1;
    long long key = 0, scale = 1;
    for (long long i = 0; i < k; ++i) {
        if (scale > (long long)4e18 / p_) fail(Err::Unsupported, "unit key overflows");
        key += scale * unit_digit(a, i);
        scale *= p_;
    }
    return key;
}

Tri PadicCtx::unit_is_nth_power(const PadicJet& a, long long n) const {
    if (a.zero) return Tri::Unknown;
    long long s = v_p(n);
    if (p_ == 2) {
        if (s == 0) return Tri::In;  // odd powers are onto Z_2^*
        if (unit_digits_known(a) < s + 2) return Tri::Unknown;
        return unit_key(a, s + 2) == 1 ? Tri::In : Tri::Out;
    }
    long long g = gcd_i64(n, p_ - 1);
    long long u0 = a.digits[0];
    if (pow_mod_i64(u0, (p_ - 1) / g, p_) != 1) return Tri::Out;
    if (s == 0) return Tri::In;
    if (unit_digits_known(a) < s + 1) return Tri::Unknown;
    long long m = pow_i64_checked(p_, s + 1);
    long long u = unit_key(a, s + 1);
    // Teichmueller component of u mod p^{s+1}: u^{p^t} stabilizes for t >= s.
    long long w = u;
    for (long long t = 0; t <= s; ++t) w = pow_mod_i64(w, p_, m);
    return (w == u) ? Tri::In : Tri::Out;
}

PadicJet PadicCtx::nth_root(const PadicJet& a, long long n, long long k) const {
    if (n < 2) fail(Err::NotInDomain, "root index must be at least 2");
    if (a.zero) fail(Err::NotInDomain, "cannot certify membership for a zero form");
    long long s = v_p(n);
    if (k <= s) fail(Err::NotInDomain, "need k > v_p(n) for the Hensel root");
    if (a.v % n != 0) fail(Err::NotInDomain, "valuation not divisible by the root index");
    long long kp = k + s;
    if (unit_digits_known(a) < kp) fail(Err::PrecisionExhausted, "cannot see the unit part mod p^(k+v(n))");
    for (long long i = 0; i < kp; ++i) {
        int want = (i == 0) ? 1 : 0;
        if (unit_digit(a, i) != want) fail(Err::NotInDomain, "unit part is not 1 mod p^(k+v(n))");
    }
    long long m = a.exact ? n_ : (long long)a.digits.size();
    long long mout = m - s;
    if (mout < 1) fail(Err::PrecisionExhausted, "no certifiable output digit for the root");

    W w = a.digits;
    w.resize((size_t)m, 0);
    long long nu = n;  // unit cofactor of n
    for (long long i = 0; i < s; ++i) nu /= p_;
    W nunit(1, 0);
    {
        W tmp;
        long long t = nu;
        while (t > 0) {
            tmp.push_back((int)(t % p_));
            t /= p_;
        }
        nunit = tmp;
    }
    W y(1, 1);
    for (long long iter = 0; iter <= 2 * m + 4; ++iter) {
        W yn = w_pow(y, (unsigned long long)n, p_, (size_t)m);
        W r = w_sub(yn, w, p_, (size_t)m);
        long long t = w_first_nonzero(r);
        if (t < 0) break;
        if (t < s + 1) fail(Err::NotInDomain, "Newton iteration left the convergence basin");
        // delta = (y^n - w) / (n * y^{n-1}); v(n y^{n-1}) = s exactly.
        W rs(r.begin() + (size_t)s, r.end());
        size_t ml = (size_t)(m - s);
        W denom = w_mul(nunit, w_pow(y, (unsigned long long)(n - 1), p_, ml), p_, ml);
        W delta = w_mul(rs, w_inv(denom, p_, ml), p_, ml);
        y = w_sub(y, delta, p_, (size_t)m);
        if (iter == 2 * m + 4) fail(Err::PrecisionExhausted, "Newton iteration failed to settle");
    }
    y.resize((size_t)mout, 0);
    long long vout = a.v / n;
    return from_window(vout, y, vout + mout, false);
}

bool PadicCtx::agree_to(const PadicJet& a, const PadicJet& b, long long upto) const {
    if (abs_prec(a) < upto || abs_prec(b) < upto) return false;
    long long lo = upto;
    if (!a.zero) lo = std::min(lo, a.v);
    if (!b.zero) lo = std::min(lo, b.v);
    for (long long i = lo; i < upto; ++i)
        if (digit_at(a, i) != digit_at(b, i)) return false;
    return true;
}

long long PadicCtx::common_prec(const PadicJet& a, const PadicJet& b) const {
    return std::min(abs_prec(a), abs_prec(b));
}

PadicJet PadicCtx::truncate(const PadicJet& a, long long P) const {
    if (a.zero) {
        if (a.exact || a.prec >= P) return PadicJet::zero_ball(P);
        fail(Err::PrecisionExhausted, "cannot truncate below known precision");
    }
    if (abs_prec(a) < P) fail(Err::PrecisionExhausted, "cannot truncate below known precision");
    if (a.v >= P) return PadicJet::zero_ball(P);
    W w((size_t)(P - a.v));
    for (long long i = a.v; i < P; ++i) w[(size_t)(i - a.v)] = digit_at(a, i);
    return from_window(a.v, w, P, false);
}

std::string PadicCtx::render(const PadicJet& a) const {
    std::ostringstream os;
    if (a.is_exact_zero()) return "0";
    if (a.is_zero_ball()) {
        os << "O(" << p_ << "^" << a.prec << ")";
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < a.digits.size(); ++i) {
        int d = a.digits[i];
        if (d == 0) continue;
        long long e = a.v + (long long)i;
        if (!first) os << " + ";
        first = false;
        if (e == 0)
            os << d;
        else if (d == 1)
            os << p_ << "^" << e;
        else
            os << d << "*" << p_ << "^" << e;
    }
    if (first) os << 0;  // exact value with all stored digits zero cannot occur; keep render total
    if (!a.exact) {
        if (!first) os << " + ";
        os << "O(" << p_ << "^" << a.prec << ")";
    }
    return os.str();
}

}  // namespace vbl
