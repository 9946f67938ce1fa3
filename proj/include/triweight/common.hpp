#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triweight {

enum class Errc {
    NotOddPrime,
    SizeGuardExceeded,
    DivisionByZero,
    FieldMismatch,
    LengthMismatch,
    ModulusMismatch,
    InvalidAutomorphism,
    NotQuadratic,
    NotInImage,
    HypothesisViolated,
    WitnessVerificationFailed,
    InternalSearchFailure,
    InvalidArgument,
    Overflow,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotOddPrime: return "NotOddPrime";
        case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::InvalidAutomorphism: return "InvalidAutomorphism";
        case Errc::NotQuadratic: return "NotQuadratic";
        case Errc::NotInImage: return "NotInImage";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::WitnessVerificationFailed: return "WitnessVerificationFailed";
        case Errc::InternalSearchFailure: return "InternalSearchFailure";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Overflow: return "Overflow";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Enumeration limits. Checks fail fast with the predicted cost in the message.
struct GuardLimits {
    long long max_field = 1'000'000;       // bound on p^m of any field and on p^s
    long long max_codewords = 1'000'000;   // bound on p^s when enumerating codewords
    long long max_subspaces = 10'000'000;  // bound on the Gaussian binomial per dimension
};

// ---- small modular helpers (p odd prime, values reduced into [0, p)) ----

inline long long mod_norm(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

inline long long pow_mod(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base = mod_norm(base, p);
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

inline long long inv_mod(long long a, long long p) {
    a = mod_norm(a, p);
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

/// Quadratic character of F_p, with eta(0) = 0.
inline int eta(long long z, long long p) {
    z = mod_norm(z, p);
    if (z == 0) return 0;
    return pow_mod(z, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// upsilon(0) = p-1, upsilon(z) = -1 otherwise.
inline long long upsilon(long long z, long long p) { return mod_norm(z, p) == 0 ? p - 1 : -1; }

/// Deterministic primality test by trial division.
inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) fail(Errc::Overflow, "64-bit overflow in product");
    return static_cast<long long>(r);
}

/// p^e with overflow check.
inline long long checked_pow(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

}  // namespace triweight
