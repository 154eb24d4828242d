#pragma once

// Exact signed integers with no overflow: sign + base-2^32 magnitude.
// Only the operations the rest of the library needs (add, subtract,
// multiply, compare, decimal I/O); no division beyond the radix
// conversion helper.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acgroups {

class Integer {
public:
    Integer() = default;

    Integer(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN: peel limbs from the unsigned magnitude
        unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                       : static_cast<unsigned long long>(v);
        while (mag != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
            mag >>= 32;
        }
    }

    static Integer fromString(std::string_view text) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        if (pos == text.size())
            throw std::invalid_argument("Integer::fromString: no digits");
        Integer result;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("Integer::fromString: bad digit");
            result.mulSmallAdd(10, static_cast<std::uint32_t>(c - '0'));
        }
        if (!result.limbs_.empty()) result.sign_ = sign;
        return result;
    }

    bool isZero() const { return sign_ == 0; }
    bool isOne() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool isMinusOne() const { return sign_ == -1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int signum() const { return sign_; }

    friend Integer operator-(const Integer& a) {
        Integer r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        Integer r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = addMag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int cmp = cmpMag(a.limbs_, b.limbs_);
            if (cmp == 0) return Integer();
            if (cmp > 0) {
                r.limbs_ = subMag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = subMag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

    friend Integer operator*(const Integer& a, const Integer& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return Integer();
        Integer r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int cmp = cmpMag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
    }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator<=(const Integer& a, const Integer& b) { return !(b < a); }
    friend bool operator>=(const Integer& a, const Integer& b) { return !(a < b); }

    bool fitsInt64() const {
        if (limbs_.size() > 2) return false;
        unsigned long long mag = magU64();
        if (sign_ >= 0) return mag <= 0x7fffffffffffffffULL;
        return mag <= 0x8000000000000000ULL;
    }

    long long toInt64() const {
        if (!fitsInt64()) throw std::overflow_error("Integer::toInt64");
        unsigned long long mag = magU64();
        if (sign_ >= 0) return static_cast<long long>(mag);
        return -static_cast<long long>(mag - 1) - 1;
    }

    std::string toString() const {
        if (sign_ == 0) return "0";
        // convert by repeated division by 10^9
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    std::size_t hashValue() const {
        std::size_t h = static_cast<std::size_t>(sign_ + 2);
        for (std::uint32_t limb : limbs_) h = h * 1000003u ^ limb;
        return h;
    }

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // little-endian, empty iff zero

    unsigned long long magU64() const {
        unsigned long long mag = limbs_.empty() ? 0 : limbs_[0];
        if (limbs_.size() == 2) mag |= static_cast<unsigned long long>(limbs_[1]) << 32;
        return mag;
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    void mulSmallAdd(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (std::uint32_t& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
        if (!limbs_.empty()) sign_ = 1;
    }

    static int cmpMag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> addMag(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> subMag(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += 1LL << 32;
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace acgroups
