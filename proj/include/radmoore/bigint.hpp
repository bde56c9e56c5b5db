#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radmoore {

// Arbitrary-precision signed integer, sign/magnitude with 32-bit limbs.
// Every quantity in this library fits in a few hundred bits, so schoolbook
// arithmetic is all that is needed.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        neg_ = v < 0;
        unsigned long long m = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                    : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }

    static BigInt power(const BigInt& base, unsigned exp) {
        BigInt result(1);
        BigInt b = base;
        while (exp != 0) {
            if (exp & 1u) result *= b;
            exp >>= 1;
            if (exp != 0) b *= b;
        }
        return result;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return neg_; }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) {
        if (neg_ == o.neg_) {
            add_mag(limbs_, o.limbs_);
        } else {
            int c = cmp_mag(limbs_, o.limbs_);
            if (c == 0) {
                limbs_.clear();
                neg_ = false;
            } else if (c > 0) {
                sub_mag(limbs_, o.limbs_);
            } else {
                std::vector<std::uint32_t> tmp = o.limbs_;
                sub_mag(tmp, limbs_);
                limbs_ = std::move(tmp);
                neg_ = o.neg_;
            }
        }
        return *this;
    }

    BigInt& operator-=(const BigInt& o) { return *this += -o; }

    BigInt& operator*=(const BigInt& o) {
        if (is_zero() || o.is_zero()) {
            limbs_.clear();
            neg_ = false;
            return *this;
        }
        std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                    out[i + j] + carry;
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            out[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        limbs_ = std::move(out);
        trim(limbs_);
        neg_ = neg_ != o.neg_;
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Quotient and remainder by a positive 64-bit divisor; requires *this >= 0.
    BigInt divmod_u64(std::uint64_t div, std::uint64_t& rem) const {
        if (div == 0) throw std::domain_error("BigInt: division by zero");
        if (neg_) throw std::domain_error("BigInt: divmod_u64 needs a nonnegative value");
        BigInt q;
        q.limbs_.assign(limbs_.size(), 0);
        unsigned __int128 r = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            r = (r << 32) | limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(r / div);
            r %= div;
        }
        trim(q.limbs_);
        rem = static_cast<std::uint64_t>(r);
        return q;
    }

    // Exact division by a positive 64-bit divisor; throws on a nonzero remainder.
    BigInt div_exact_u64(std::uint64_t div) const {
        BigInt mag = *this;
        mag.neg_ = false;
        std::uint64_t rem = 0;
        BigInt q = mag.divmod_u64(div, rem);
        if (rem != 0) throw std::domain_error("BigInt: division is not exact");
        if (!q.is_zero()) q.neg_ = neg_;
        return q;
    }

    friend bool operator==(const BigInt&, const BigInt&) = default;

    std::strong_ordering operator<=>(const BigInt& o) const {
        if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(limbs_, o.limbs_);
        if (neg_) c = -c;
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> mag = limbs_;
        std::string digits;
        while (!mag.empty()) {
            unsigned __int128 r = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                r = (r << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(r / 1000000000u);
                r %= 1000000000u;
            }
            trim(mag);
            std::uint32_t chunk = static_cast<std::uint32_t>(r);
            for (int i = 0; i < 9; ++i) {
                digits.push_back(static_cast<char>('0' + chunk % 10));
                chunk /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (neg_) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    // Throws std::overflow_error when the value does not fit in a long long.
    long long to_int64() const {
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: value exceeds 64 bits");
        unsigned long long m = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        if (neg_) {
            if (m > 0x8000000000000000ULL) throw std::overflow_error("BigInt: value exceeds 64 bits");
            return static_cast<long long>(~m + 1ULL);
        }
        if (m > 0x7FFFFFFFFFFFFFFFULL) throw std::overflow_error("BigInt: value exceeds 64 bits");
        return static_cast<long long>(m);
    }

    double to_double() const {
        double m = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) m = m * 4294967296.0 + limbs_[i];
        return neg_ ? -m : m;
    }

private:
    bool neg_ = false;                   // never set when limbs_ is empty
    std::vector<std::uint32_t> limbs_;   // little-endian base 2^32, no leading zeros

    static void trim(std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0u);
            a[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) a.push_back(static_cast<std::uint32_t>(carry));
    }

    // requires mag(a) >= mag(b)
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            a[i] = static_cast<std::uint32_t>(cur);
        }
        trim(a);
    }
};

// Exact floor square root, integer arithmetic only.
inline std::uint64_t isqrt_u64(std::uint64_t x) {
    std::uint64_t r = 0;
    std::uint64_t bit = 1ULL << 62;
    while (bit > x) bit >>= 2;
    while (bit != 0) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

}  // namespace radmoore
