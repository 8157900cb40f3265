#ifndef DCP_QPOLY_HPP
#define DCP_QPOLY_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcp/rational.hpp"

namespace dcp {

/// Exact univariate polynomial in q with rational coefficients.
/// Coefficients are stored by ascending degree, with no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant) { c_.push_back(constant); trim(); }  // NOLINT: implicit
    QPoly(long constant) : QPoly(Rat(constant)) {}                  // NOLINT: implicit
    QPoly(const Int& constant) : QPoly(Rat(constant)) {}            // NOLINT: implicit
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly q_pow(long d, const Rat& coeff = 1) {
        std::vector<Rat> v(static_cast<size_t>(d) + 1, Rat(0));
        v.back() = coeff;
        return QPoly(std::move(v));
    }

    /// (q^a - q)/(q-1) expanded: q + q^2 + ... + q^{a-1}; zero for a <= 1.
    static QPoly geometric(long a) {
        if (a <= 1) return QPoly();
        std::vector<Rat> v(static_cast<size_t>(a), Rat(0));
        for (long i = 1; i < a; ++i) v[static_cast<size_t>(i)] = 1;
        return QPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    Rat coeff(long d) const {
        if (d < 0 || d >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<size_t>(d)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    QPoly& operator+=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(v));
    }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

    QPoly& scale(const Rat& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }
    friend QPoly operator*(const Rat& s, QPoly p) { p.scale(s); return p; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Exact quotient by (q-1). Requires p(1) == 0; aborts loudly otherwise
    /// since a nonzero remainder means a transcription bug upstream.
    QPoly div_qminus1() const {
        if (is_zero()) return QPoly();
        if (eval(1) != 0) throw std::domain_error("div_qminus1: polynomial has no root at q=1");
        // Synthetic division by (q - 1), high degree down.
        std::vector<Rat> out(c_.size() - 1, Rat(0));
        Rat carry = 0;
        for (long d = degree(); d >= 1; --d) {
            carry += c_[static_cast<size_t>(d)];
            out[static_cast<size_t>(d) - 1] = carry;
        }
        return QPoly(std::move(out));
    }

    bool integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return denominator(x) == 1; });
    }
    bool nonnegative() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x >= 0; });
    }
    bool palindromic() const {
        if (is_zero()) return false;
        long d = degree();
        for (long i = 0; 2 * i <= d; ++i)
            if (coeff(i) != coeff(d - i)) return false;
        return true;
    }

    /// Text format: descending degree, explicit coefficients != 1,
    /// e.g. "q^3+16*q^2+16*q+1". Zero polynomial prints "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long d = degree(); d >= 0; --d) {
            Rat a = coeff(d);
            if (a == 0) continue;
            if (!first) os << (a > 0 ? "+" : "-");
            else if (a < 0) os << "-";
            Rat mag = a > 0 ? a : Rat(-a);
            bool unit = (mag == 1);
            if (d == 0 || !unit) os << mag;
            if (d > 0) {
                if (!unit) os << "*";
                os << "q";
                if (d > 1) os << "^" << d;
            }
            first = false;
        }
        return os.str();
    }

    /// Parses the str() format back (integer or rational a/b coefficients).
    static QPoly parse(const std::string& s) {
        if (s == "0") return QPoly();
        std::vector<Rat> coeffs;
        size_t i = 0;
        auto need = [&](bool cond, const char* msg) {
            if (!cond) throw std::invalid_argument(std::string("QPoly::parse: ") + msg);
        };
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+') ++i;
            else if (s[i] == '-') { sign = -1; ++i; }
            Rat mag = 1;
            if (i < s.size() && (std::isdigit(s[i]) != 0)) {
                size_t j = i;
                while (j < s.size() && (std::isdigit(s[j]) != 0 || s[j] == '/')) ++j;
                mag = Rat(s.substr(i, j - i));
                i = j;
                if (i < s.size() && s[i] == '*') ++i;
            }
            long deg = 0;
            if (i < s.size() && s[i] == 'q') {
                ++i;
                deg = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t j = i;
                    while (j < s.size() && std::isdigit(s[j]) != 0) ++j;
                    need(j > i, "missing exponent");
                    deg = std::stol(s.substr(i, j - i));
                    i = j;
                }
            }
            if (static_cast<long>(coeffs.size()) <= deg) coeffs.resize(static_cast<size_t>(deg) + 1, Rat(0));
            coeffs[static_cast<size_t>(deg)] += sign * mag;
        }
        return QPoly(std::move(coeffs));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace dcp

#endif
