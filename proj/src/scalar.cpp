#include "mbmod/scalar.hpp"

#include <array>
#include <charconv>

namespace mbmod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t parse_u64_digits(std::string_view text, const char* what) {
    if (text.empty()) fail(errc::parse_error, std::string(what) + ": empty number");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(errc::parse_error, std::string(what) + ": bad number '" + std::string(text) + "'");
    return value;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : small) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int it = 1; it < r; ++it) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime_u64(p))
        fail(errc::non_prime_modulus, "modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::str() const {
    if (kind == Kind::rational) return "rational";
    return "gf(" + std::to_string(modulus) + ")";
}

Scalar Scalar::zero(const FieldSpec& fs) {
    Scalar s;
    s.field_ = fs;
    return s;
}

Scalar Scalar::one(const FieldSpec& fs) {
    Scalar s;
    s.field_ = fs;
    if (fs.kind == FieldSpec::Kind::rational) {
        s.rat_ = 1;
    } else {
        s.res_ = 1 % fs.modulus;
    }
    return s;
}

Scalar Scalar::from_int(const FieldSpec& fs, long long v) {
    Scalar s;
    s.field_ = fs;
    if (fs.kind == FieldSpec::Kind::rational) {
        s.rat_ = v;
    } else {
        __int128 r = static_cast<__int128>(v) % static_cast<__int128>(fs.modulus);
        if (r < 0) r += fs.modulus;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_fraction(long long num, long long den) {
    if (den == 0) fail(errc::parse_error, "zero denominator");
    // normalize the sign here: cpp_rational requires a positive denominator;
    // going through cpp_int keeps -LLONG_MIN exact
    boost::multiprecision::cpp_int n(num), d(den);
    if (d < 0) {
        d = -d;
        n = -n;
    }
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.rat_ = Rational(n, d); // gcd-reduced by cpp_rational
    return s;
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& fs) {
    Scalar s;
    s.field_ = fs;
    if (fs.kind == FieldSpec::Kind::prime) {
        std::uint64_t v = parse_u64_digits(text, "coefficient");
        if (v >= fs.modulus)
            fail(errc::parse_error,
                 "residue " + std::string(text) + " not canonical for " + fs.str());
        s.res_ = v;
        return s;
    }
    std::string_view rest = text;
    bool neg = false;
    if (!rest.empty() && rest.front() == '-') {
        neg = true;
        rest.remove_prefix(1);
    }
    std::string_view num = rest, den = "1";
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        fail(errc::parse_error, "bad rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int n{std::string(num)}, d{std::string(den)};
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    if (neg) n = -n;
    s.rat_ = Rational(n, d);
    return s;
}

bool Scalar::is_zero() const {
    if (field_.kind == FieldSpec::Kind::rational) return rat_ == 0;
    return res_ == 0;
}

std::string Scalar::str() const {
    if (field_.kind == FieldSpec::Kind::prime) return std::to_string(res_);
    std::string out = numerator(rat_).str();
    if (denominator(rat_) != 1) {
        out += '/';
        out += denominator(rat_).str();
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (field_ != rhs.field_)
        fail(errc::field_mismatch, "cannot add " + field_.str() + " and " + rhs.field_.str());
    if (field_.kind == FieldSpec::Kind::rational) {
        rat_ += rhs.rat_;
    } else {
        res_ = addmod(res_, rhs.res_, field_.modulus);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (field_ != rhs.field_)
        fail(errc::field_mismatch, "cannot multiply " + field_.str() + " and " + rhs.field_.str());
    if (field_.kind == FieldSpec::Kind::rational) {
        rat_ *= rhs.rat_;
    } else {
        res_ = mulmod(res_, rhs.res_, field_.modulus);
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rational) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = field_.modulus - res_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    if (field_.kind == FieldSpec::Kind::rational) return rat_ == rhs.rat_;
    return res_ == rhs.res_;
}

const char* errc_name(errc code) {
    switch (code) {
    case errc::duplicate_pair: return "DuplicatePair";
    case errc::zero_coefficient: return "ZeroCoefficient";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_connected: return "NotConnected";
    case errc::empty_module: return "EmptyModule";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::unsatisfiable: return "Unsatisfiable";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace mbmod
