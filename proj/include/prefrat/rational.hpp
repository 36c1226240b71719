#ifndef PREFRAT_RATIONAL_HPP
#define PREFRAT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "prefrat/errors.hpp"

namespace prefrat {

/// Exact rational number on 64-bit words, always reduced, denominator > 0.
/// Intermediate products go through 128-bit arithmetic; results that do not
/// fit back into 64 bits throw. The quantities handled here (matrix entries
/// in [0,1], voter fractions over |V|) stay far from the limits.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("division by zero rational");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "a/b", integer strings, and exact decimals like "0.5".
    static Rational parse(const std::string& text) {
        std::string s = trimmed(text);
        if (s.empty()) throw ParseError("empty rational literal");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return Rational(parse_int(s.substr(0, slash)),
                            parse_int(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (frac.empty() || frac.size() > 18)
                throw ParseError("bad decimal literal: " + text);
            bool neg = !head.empty() && head[0] == '-';
            std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head);
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            std::int64_t fnum = parse_int(frac);
            if (fnum < 0) throw ParseError("bad decimal literal: " + text);
            std::int64_t total = (neg ? -1 : 1) * (std::llabs(whole) * scale + fnum);
            return Rational(total, scale);
        }
        return Rational(parse_int(s));
    }

private:
    using i128 = __int128;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw Error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        const i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw Error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static std::string trimmed(const std::string& s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return "";
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    }

    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) throw ParseError("bad integer literal: " + s);
        std::int64_t v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("bad integer literal: " + s);
            v = v * 10 + (s[i] - '0');
        }
        return s[0] == '-' ? -v : v;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace prefrat

#endif
