#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "mbmod/error.hpp"

namespace mbmod {

/// Deterministic Miller-Rabin, complete for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// The coefficient field: the rationals, or GF(p) for a prime p.
struct FieldSpec {
    enum class Kind : std::uint8_t { rational, prime };

    Kind kind = Kind::rational;
    std::uint64_t modulus = 0; // set iff kind == prime

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint64_t p); // throws non_prime_modulus

    bool operator==(const FieldSpec&) const = default;
    std::string str() const; // "rational" or "gf(p)"
};

/// An exact field element. Arithmetic never rounds; zero tests are exact.
/// Rational values are kept in canonical reduced form (sign on the
/// numerator), prime-field values as residues in [0, p).
class Scalar {
public:
    using Rational = boost::multiprecision::cpp_rational;

    Scalar() = default; // rational zero

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar from_int(const FieldSpec& fs, long long v);
    static Scalar from_fraction(long long num, long long den); // rational; den != 0

    /// Parses the canonical text form: "n" or "n/d" (optional leading '-',
    /// d > 0) for rationals, a decimal residue < p for prime fields.
    /// Unreduced fractions are accepted and normalized.
    static Scalar parse(std::string_view text, const FieldSpec& fs);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    const Rational& rational_value() const { return rat_; }
    std::uint64_t residue() const { return res_; }

    /// Canonical text form; parse(str(), field()) round-trips exactly.
    std::string str() const;

    Scalar& operator+=(const Scalar& rhs); // throws field_mismatch
    Scalar& operator*=(const Scalar& rhs);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    Scalar operator-() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

private:
    FieldSpec field_{};
    Rational rat_{};        // rational fields
    std::uint64_t res_ = 0; // prime fields
};

} // namespace mbmod
