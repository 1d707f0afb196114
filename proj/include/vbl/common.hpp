#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vbl {

// Every recoverable failure in the library carries one of these codes so
// callers (and the CLI exit-code logic) can dispatch without string matching.
enum class Err {
    NotPrime,
    BadPrecision,
    ZeroDenominator,
    DivisionUndecidable,
    ValuationUndecidable,
    PrecisionExhausted,
    NotInDomain,
    NotInImage,
    WildExponent,
    CosetIndexOverflow,
    EnumerationOverflow,
    UnknownMap,
    UndecidableMembership,
    ExcludedPoint,
    UnverifiedProvenance,
    UnknownGenerator,
    InsufficientRelations,
    SyntaxError,
    InconsistentPrecision,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline const char* err_name(Err code) {
    switch (code) {
        case Err::NotPrime: return "NotPrime";
        case Err::BadPrecision: return "BadPrecision";
        case Err::ZeroDenominator: return "ZeroDenominator";
        case Err::DivisionUndecidable: return "DivisionUndecidable";
        case Err::ValuationUndecidable: return "ValuationUndecidable";
        case Err::PrecisionExhausted: return "PrecisionExhausted";
        case Err::NotInDomain: return "NotInDomain";
        case Err::NotInImage: return "NotInImage";
        case Err::WildExponent: return "WildExponent";
        case Err::CosetIndexOverflow: return "CosetIndexOverflow";
        case Err::EnumerationOverflow: return "EnumerationOverflow";
        case Err::UnknownMap: return "UnknownMap";
        case Err::UndecidableMembership: return "UndecidableMembership";
        case Err::ExcludedPoint: return "ExcludedPoint";
        case Err::UnverifiedProvenance: return "UnverifiedProvenance";
        case Err::UnknownGenerator: return "UnknownGenerator";
        case Err::InsufficientRelations: return "InsufficientRelations";
        case Err::SyntaxError: return "SyntaxError";
        case Err::InconsistentPrecision: return "InconsistentPrecision";
        case Err::Unsupported: return "Unsupported";
    }
    return "?";
}

// Tri-state answer for membership questions at finite precision.
// Unknown means the jet genuinely cannot decide, not that we did not try.
enum class Tri { In, Out, Unknown };

inline Tri tri_not(Tri t) {
    if (t == Tri::In) return Tri::Out;
    if (t == Tri::Out) return Tri::In;
    return Tri::Unknown;
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::Out || b == Tri::Out) return Tri::Out;
    if (a == Tri::In && b == Tri::In) return Tri::In;
    return Tri::Unknown;
}

inline Tri tri_or(Tri a, Tri b) {
    if (a == Tri::In || b == Tri::In) return Tri::In;
    if (a == Tri::Out && b == Tri::Out) return Tri::Out;
    return Tri::Unknown;
}

inline bool is_prime_i64(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long gcd_i64(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// a^e mod m for small moduli, overflow-safe via __int128.
inline long long pow_mod_i64(long long a, long long e, long long m) {
    a %= m;
    if (a < 0) a += m;
    long long r = 1;
    while (e > 0) {
        if (e & 1) r = (long long)((__int128)r * a % m);
        a = (long long)((__int128)a * a % m);
        e >>= 1;
    }
    return r;
}

// p^k as int64; throws on overflow (callers keep k small by construction).
inline long long pow_i64_checked(long long p, long long k) {
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        if (r > (long long)4e18 / p) fail(Err::PrecisionExhausted, "power overflows 64-bit range");
        r *= p;
    }
    return r;
}

}  // namespace vbl
