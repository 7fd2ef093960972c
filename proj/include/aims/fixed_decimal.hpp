#pragma once

// Exact scaled-integer decimal: value = raw / 10^18, raw a signed 128-bit
// integer (38+ significant digits). The only numeric type on paths that
// affect ledger state; no binary floating point anywhere. Rounding happens
// only at the documented points: the *_floor operations round toward
// negative infinity.

#include <cstdint>
#include <string>
#include <string_view>

#include "aims/detail/bigint.hpp"
#include "aims/error.hpp"

namespace aims {

class FixedDecimal {
public:
    using rep = __int128;

    static constexpr int scale = 18;

    static constexpr rep one_raw() {
        rep r = 1;
        for (int i = 0; i < scale; ++i) r *= 10;
        return r;
    }

    constexpr FixedDecimal() = default;

    static constexpr FixedDecimal from_raw(rep raw) {
        FixedDecimal d;
        d.raw_ = raw;
        return d;
    }

    static constexpr FixedDecimal from_units(std::int64_t units) {
        return from_raw(static_cast<rep>(units) * one_raw());
    }

    constexpr rep raw() const { return raw_; }
    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool is_negative() const { return raw_ < 0; }
    constexpr bool is_positive() const { return raw_ > 0; }

    friend constexpr bool operator==(FixedDecimal a, FixedDecimal b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(FixedDecimal a, FixedDecimal b) { return a.raw_ != b.raw_; }
    friend constexpr bool operator<(FixedDecimal a, FixedDecimal b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(FixedDecimal a, FixedDecimal b) { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(FixedDecimal a, FixedDecimal b) { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(FixedDecimal a, FixedDecimal b) { return a.raw_ >= b.raw_; }

    FixedDecimal operator+(FixedDecimal rhs) const {
        rep out;
        if (__builtin_add_overflow(raw_, rhs.raw_, &out))
            throw Error(errc::overflow, "decimal addition overflow");
        return from_raw(out);
    }

    FixedDecimal operator-(FixedDecimal rhs) const {
        rep out;
        if (__builtin_sub_overflow(raw_, rhs.raw_, &out))
            throw Error(errc::overflow, "decimal subtraction overflow");
        return from_raw(out);
    }

    FixedDecimal operator-() const {
        if (raw_ == min_raw()) throw Error(errc::overflow, "decimal negation overflow");
        return from_raw(-raw_);
    }

    FixedDecimal& operator+=(FixedDecimal rhs) { *this = *this + rhs; return *this; }
    FixedDecimal& operator-=(FixedDecimal rhs) { *this = *this - rhs; return *this; }

    // floor(a * b / 10^18), rounding toward negative infinity.
    static FixedDecimal mul_floor(FixedDecimal a, FixedDecimal b) {
        return scaled_ratio(a, b, FixedDecimal::from_raw(one_raw()));
    }

    // floor(a * 10^18 / b), rounding toward negative infinity.
    static FixedDecimal div_floor(FixedDecimal a, FixedDecimal b) {
        return scaled_ratio(a, FixedDecimal::from_raw(one_raw()), b);
    }

    // floor(a * num / den), rounding toward negative infinity. Exact when
    // num == den regardless of magnitude.
    static FixedDecimal mul_div_floor(FixedDecimal a, FixedDecimal num, FixedDecimal den) {
        return scaled_ratio(a, num, den);
    }

    // Accepts [+-]digits[.digits], at most 18 fractional digits, no exponent.
    static FixedDecimal parse(std::string_view text) {
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        std::size_t int_begin = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        std::size_t int_len = i - int_begin;
        std::size_t frac_begin = 0, frac_len = 0;
        if (i < text.size() && text[i] == '.') {
            ++i;
            frac_begin = i;
            while (i < text.size() && is_digit(text[i])) ++i;
            frac_len = i - frac_begin;
            if (frac_len == 0)
                throw Error(errc::decimal_parse, "missing digits after decimal point in \"" +
                                                     std::string(text) + "\"");
        }
        if (i != text.size() || int_len == 0)
            throw Error(errc::decimal_parse, "not a decimal number: \"" + std::string(text) + "\"");
        if (frac_len > static_cast<std::size_t>(scale))
            throw Error(errc::decimal_precision,
                        "more than 18 fractional digits in \"" + std::string(text) + "\"");

        unsigned __int128 mag = 0;
        auto push_digit = [&mag, &text](char c) {
            constexpr unsigned __int128 lim = static_cast<unsigned __int128>(-1) / 10;
            if (mag > lim)
                throw Error(errc::overflow, "decimal out of range: \"" + std::string(text) + "\"");
            mag = mag * 10 + static_cast<unsigned>(c - '0');
        };
        for (std::size_t k = 0; k < int_len; ++k) push_digit(text[int_begin + k]);
        for (std::size_t k = 0; k < frac_len; ++k) push_digit(text[frac_begin + k]);
        for (std::size_t k = frac_len; k < static_cast<std::size_t>(scale); ++k) push_digit('0');

        constexpr unsigned __int128 max_mag = ~(static_cast<unsigned __int128>(1) << 127);
        if (mag > max_mag + (neg ? 1 : 0))
            throw Error(errc::overflow, "decimal out of range: \"" + std::string(text) + "\"");
        if (neg && mag == max_mag + 1) return from_raw(min_raw());
        return from_raw(neg ? -static_cast<rep>(mag) : static_cast<rep>(mag));
    }

    // Canonical form: optional '-', integer part, '.', exactly 18 digits.
    std::string to_string() const {
        unsigned __int128 mag = raw_ < 0 ? static_cast<unsigned __int128>(-(raw_ + 1)) + 1
                                         : static_cast<unsigned __int128>(raw_);
        unsigned __int128 ip = mag / static_cast<unsigned __int128>(one_raw());
        unsigned __int128 fp = mag % static_cast<unsigned __int128>(one_raw());
        std::string frac(scale, '0');
        for (int k = scale; k-- > 0;) {
            frac[static_cast<std::size_t>(k)] = static_cast<char>('0' + static_cast<int>(fp % 10));
            fp /= 10;
        }
        return (raw_ < 0 ? "-" : "") + u128_to_string(ip) + "." + frac;
    }

private:
    static constexpr rep min_raw() { return static_cast<rep>(static_cast<unsigned __int128>(1) << 127); }
    static constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static std::string u128_to_string(unsigned __int128 v) {
        if (v == 0) return "0";
        std::string s;
        while (v != 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    }

    static FixedDecimal scaled_ratio(FixedDecimal a, FixedDecimal num, FixedDecimal den) {
        if (den.raw_ == 0) throw Error(errc::division_by_zero, "decimal division by zero");
        bool neg = (a.raw_ < 0) ^ (num.raw_ < 0) ^ (den.raw_ < 0);
        auto abs128 = [](rep v) {
            return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
                         : static_cast<unsigned __int128>(v);
        };
        detail::BigUint n = detail::BigUint::from_u128(abs128(a.raw_)) *
                            detail::BigUint::from_u128(abs128(num.raw_));
        auto dm = detail::BigUint::divmod(n, detail::BigUint::from_u128(abs128(den.raw_)));
        if (neg && !dm.rem.is_zero()) dm.quot += detail::BigUint{1};
        if (!dm.quot.fits_u128())
            throw Error(errc::overflow, "decimal multiply/divide overflow");
        unsigned __int128 q = dm.quot.to_u128();
        unsigned __int128 limit = static_cast<unsigned __int128>(1) << 127;
        if (neg) {
            if (q > limit) throw Error(errc::overflow, "decimal multiply/divide overflow");
            return from_raw(q == limit ? min_raw() : -static_cast<rep>(q));
        }
        if (q >= limit) throw Error(errc::overflow, "decimal multiply/divide overflow");
        return from_raw(static_cast<rep>(q));
    }

    rep raw_ = 0;
};

} // namespace aims
