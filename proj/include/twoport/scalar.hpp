#pragma once

// Exact arithmetic in Q and in a real quadratic field Q(sqrt d).
//
// A Scalar is a + b*sqrt(d) with rational a, b. d is square-free (>= 2) or 0;
// a pure rational always carries d = 0, so rationals from different documents
// compare and combine freely, and Q embeds into every Q(sqrt d). Combining
// two values with distinct nonzero d is an error. Everything is exact: the
// sign of a + b*sqrt(d) is decided by comparing a^2 against b^2*d, never by
// floating point.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "twoport/rational.hpp"

namespace twoport {

namespace detail {

inline bool is_square_free(long d) {
    if (d < 0) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace detail

// Document-wide default discriminant, used by the parser and sqrt-term
// constructors when no d is given explicitly. The paper-scale examples all
// live in Q(sqrt 2).
class Field {
public:
    static long default_d() { return d_ref(); }

    static void set_default_d(long d) {
        check(d);
        d_ref() = d;
    }

    static void check(long d) {
        if (d == 0) return;
        if (d < 2 || !detail::is_square_free(d))
            throw std::invalid_argument("field discriminant must be 0 or a square-free integer >= 2, got " +
                                        std::to_string(d));
    }

private:
    static long& d_ref() {
        static long d = 2;
        return d;
    }
};

class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long v) : a_(rat(v)), b_(0), d_(0) {}  // NOLINT: implicit by design
    Scalar(Rat v) : a_(std::move(v)), b_(0), d_(0) {}

    Scalar(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        Field::check(d);
        normalize();
    }

    // b*sqrt(d) with the ambient default d.
    static Scalar sqrt_term(const Rat& b) { return Scalar(Rat(0), b, Field::default_d()); }
    static Scalar sqrt_term(const Rat& b, long d) { return Scalar(Rat(0), b, d); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    long discriminant() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    // Exact sign of the real number a + b*sqrt(d).
    int sign() const {
        int sa = sgn(a_);
        int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a_ * a_;
        Rat rhs = b_ * b_ * d_;
        int c = cmp(lhs, rhs);
        if (c == 0) throw std::logic_error("a^2 == b^2 d with b != 0: discriminant is not square-free");
        return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
    }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        long d = joint_d(x, y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        long d = joint_d(x, y);
        return Scalar(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        long d = joint_d(x, y);
        return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm is
        // nonzero because d is not a perfect square.
        Rat norm = a_ * a_ - b_ * b_ * d_;
        if (sgn(norm) == 0) throw std::logic_error("zero norm for nonzero element");
        return Scalar(a_ / norm, -b_ / norm, d_);
    }

    Scalar abs() const { return sign() >= 0 ? *this : -*this; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

    // Canonical text form: "p/q", "p/q + r/s*sqrt(d)", "sqrt(d)", "-2*sqrt(2)", ...
    std::string str() const {
        if (is_rational()) return rat_to_string(a_);
        std::string rad = radical_str();
        if (sgn(a_) == 0) return rad;
        std::string out = rat_to_string(a_);
        if (sgn(b_) > 0) {
            out += " + " + rad;
        } else {
            out += " - ";
            Rat nb = -b_;
            out += Scalar(Rat(0), nb, d_).radical_str();
        }
        return out;
    }

    // Display-only approximation (SVG output, diagnostics). Never feeds back
    // into any exact computation.
    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

    static Scalar parse(const std::string& text) { return parse(text, Field::default_d()); }
    static Scalar parse(const std::string& text, long ambient_d);

private:
    Rat a_, b_;
    long d_;

    void normalize() {
        if (sgn(b_) == 0) d_ = 0;
        if (d_ == 0 && sgn(b_) != 0)
            throw std::invalid_argument("sqrt coefficient requires a nonzero field discriminant");
    }

    static long joint_d(const Scalar& x, const Scalar& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw std::invalid_argument("mixing elements of Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                                    std::to_string(y.d_) + ")");
    }

    std::string radical_str() const {
        std::string s = "sqrt(" + std::to_string(d_) + ")";
        if (b_ == 1) return s;
        if (b_ == -1) return "-" + s;
        return rat_to_string(b_) + "*" + s;
    }
};

inline int sign(const Scalar& x) { return x.sign(); }
inline bool is_rational(const Scalar& x) { return x.is_rational(); }

namespace detail {

// Recursive-descent parser for the exact text form: a signed sum of terms,
// each either a rational "p/q" or a radical "[p/q*]sqrt(d)". No decimals.
class ScalarParser {
public:
    ScalarParser(const std::string& text, long ambient_d) : s_(text), d_(ambient_d) {}

    Scalar run() {
        Scalar acc;
        skip_ws();
        bool first = true;
        while (true) {
            int sg = 1;
            skip_ws();
            if (pos_ >= s_.size()) {
                if (first) throw std::invalid_argument("empty scalar literal");
                break;
            }
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sg = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' in scalar literal: '" + s_ + "'");
            }
            Scalar term = parse_term();
            acc += (sg < 0 ? -term : term);
            first = false;
            skip_ws();
            if (pos_ >= s_.size()) break;
        }
        return acc;
    }

private:
    const std::string& s_;
    long d_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool peek_sqrt() {
        skip_ws();
        return s_.compare(pos_, 4, "sqrt") == 0;
    }

    Scalar parse_term() {
        skip_ws();
        if (peek_sqrt()) return parse_sqrt(Rat(1));
        Rat coef = parse_rational();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            if (!peek_sqrt()) throw std::invalid_argument("expected sqrt(...) after '*' in '" + s_ + "'");
            return parse_sqrt(coef);
        }
        return Scalar(coef);
    }

    Scalar parse_sqrt(const Rat& coef) {
        pos_ += 4;  // "sqrt"
        skip_ws();
        expect('(');
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0)) ++pos_;
        if (start == pos_) throw std::invalid_argument("expected integer inside sqrt(...) in '" + s_ + "'");
        long dd = std::stol(s_.substr(start, pos_ - start));
        skip_ws();
        expect(')');
        if (dd == 0) return Scalar(Rat(0));
        if (dd == 1) return Scalar(coef);
        if (dd != d_)
            throw std::invalid_argument("sqrt(" + std::to_string(dd) + ") does not live in Q(sqrt " +
                                        std::to_string(d_) + ")");
        return Scalar(Rat(0), coef, d_);
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in scalar literal: '" + s_ + "'");
        ++pos_;
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
            ++digits;
        }
        if (pos_ < s_.size() && s_[pos_] == '.')
            throw std::invalid_argument("decimal literals are not accepted: '" + s_ + "'");
        if (digits == 0) throw std::invalid_argument("expected number in scalar literal: '" + s_ + "'");
        std::string num = s_.substr(start, pos_ - start);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
            if (dstart == pos_) throw std::invalid_argument("expected denominator in '" + s_ + "'");
            if (pos_ < s_.size() && s_[pos_] == '.')
                throw std::invalid_argument("decimal literals are not accepted: '" + s_ + "'");
            num += "/" + s_.substr(dstart, pos_ - dstart);
        }
        return rat_from_string(num);
    }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text, long ambient_d) {
    Field::check(ambient_d);
    return detail::ScalarParser(text, ambient_d).run();
}

}  // namespace twoport
