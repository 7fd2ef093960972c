#pragma once

// Unsigned arbitrary-precision integer backing the fixed-point engine.
// Little-endian 64-bit limbs, always normalized (no high zero limbs).
// Pure integer arithmetic: results are bit-identical on every platform.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aims::detail {

class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    static BigUint from_u128(unsigned __int128 v) {
        BigUint r;
        if (v != 0) {
            r.limbs_.push_back(static_cast<std::uint64_t>(v));
            std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
            if (hi != 0) r.limbs_.push_back(hi);
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint64_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 64;
        while (top != 0) { ++bits; top >>= 1; }
        return bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 64;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 64)) & 1u;
    }

    void set_bit(std::size_t i) {
        std::size_t limb = i / 64;
        if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= (std::uint64_t{1} << (i % 64));
    }

    static int compare(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

    BigUint& operator+=(const BigUint& rhs) {
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 sum = carry + limbs_[i];
            if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(sum);
            carry = sum >> 64;
            if (carry == 0 && i >= rhs.limbs_.size()) break;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // Requires *this >= rhs.
    BigUint& operator-=(const BigUint& rhs) {
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t sub = (i < rhs.limbs_.size()) ? rhs.limbs_[i] : 0;
            std::uint64_t before = limbs_[i];
            std::uint64_t after = before - sub - borrow;
            borrow = (before < sub || (borrow && before == sub)) ? 1 : 0;
            limbs_[i] = after;
            if (borrow == 0 && i >= rhs.limbs_.size()) break;
        }
        normalize();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint{};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j]
                                        + r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
                carry = static_cast<std::uint64_t>(cur >> 64);
            }
            r.limbs_[i + b.limbs_.size()] += carry;
        }
        r.normalize();
        return r;
    }

    BigUint& operator<<=(std::size_t bits) {
        if (is_zero() || bits == 0) return *this;
        std::size_t limb_shift = bits / 64;
        std::size_t bit_shift = bits % 64;
        std::size_t old = limbs_.size();
        limbs_.resize(old + limb_shift + 1, 0);
        for (std::size_t i = old; i-- > 0;) {
            std::uint64_t v = limbs_[i];
            limbs_[i] = 0;
            if (bit_shift == 0) {
                limbs_[i + limb_shift] |= v;
            } else {
                limbs_[i + limb_shift + 1] |= v >> (64 - bit_shift);
                limbs_[i + limb_shift] |= v << bit_shift;
            }
        }
        normalize();
        return *this;
    }

    BigUint& operator>>=(std::size_t bits) {
        if (is_zero() || bits == 0) return *this;
        std::size_t limb_shift = bits / 64;
        std::size_t bit_shift = bits % 64;
        if (limb_shift >= limbs_.size()) { limbs_.clear(); return *this; }
        std::size_t n = limbs_.size() - limb_shift;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
            if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
                v |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
            limbs_[i] = v;
        }
        limbs_.resize(n);
        normalize();
        return *this;
    }

    friend BigUint operator<<(BigUint a, std::size_t bits) { a <<= bits; return a; }
    friend BigUint operator>>(BigUint a, std::size_t bits) { a >>= bits; return a; }

    struct DivMod {
        BigUint quot;
        BigUint rem;
    };

    // Long division over quotient bits. den must be non-zero.
    static DivMod divmod(const BigUint& num, const BigUint& den) {
        DivMod out;
        if (compare(num, den) < 0) { out.rem = num; return out; }
        std::size_t shift = num.bit_length() - den.bit_length();
        BigUint cur = den << shift;
        out.rem = num;
        for (std::size_t i = shift + 1; i-- > 0;) {
            if (compare(out.rem, cur) >= 0) {
                out.rem -= cur;
                out.quot.set_bit(i);
            }
            cur >>= 1;
        }
        return out;
    }

    static BigUint pow(BigUint base, unsigned exp) {
        BigUint acc{1};
        while (exp > 0) {
            if (exp & 1u) acc = acc * base;
            exp >>= 1;
            if (exp) base = base * base;
        }
        return acc;
    }

    bool fits_u128() const { return bit_length() <= 128; }

    // Requires fits_u128().
    unsigned __int128 to_u128() const {
        unsigned __int128 v = 0;
        if (limbs_.size() > 1) v = static_cast<unsigned __int128>(limbs_[1]) << 64;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

private:
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

} // namespace aims::detail
