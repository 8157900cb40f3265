#ifndef DCP_SERIES_HPP
#define DCP_SERIES_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "dcp/qpoly.hpp"

namespace dcp {

/// Power series in t truncated at order N, polynomial in y, with exact
/// QPoly coefficients. Zero coefficients are never stored; no operation
/// consults t-degrees above N.
class TSeries {
public:
    using Key = std::pair<long, long>;  // (deg_t, deg_y)

    explicit TSeries(long order_t) : order_(order_t) {
        if (order_t < 0) throw std::invalid_argument("TSeries: negative order");
    }

    static TSeries constant(long order_t, const QPoly& p) {
        TSeries s(order_t);
        s.set(0, 0, p);
        return s;
    }
    /// The series t (single monomial t^1 y^0).
    static TSeries t_var(long order_t) {
        TSeries s(order_t);
        s.set(1, 0, QPoly(1));
        return s;
    }

    long order_t() const { return order_; }
    const std::map<Key, QPoly>& terms() const { return c_; }

    QPoly coeff(long deg_t, long deg_y) const {
        auto it = c_.find({deg_t, deg_y});
        return it == c_.end() ? QPoly() : it->second;
    }
    /// Sum over y-degrees at fixed t-degree (i.e. the t^n coefficient at y=1).
    QPoly coeff_t(long deg_t) const {
        QPoly r;
        for (auto& [k, p] : c_)
            if (k.first == deg_t) r += p;
        return r;
    }

    void set(long deg_t, long deg_y, const QPoly& p) {
        if (deg_t > order_) return;
        if (p.is_zero()) c_.erase({deg_t, deg_y});
        else c_[{deg_t, deg_y}] = p;
    }

    bool is_zero() const { return c_.empty(); }

    TSeries& operator+=(const TSeries& o) {
        check(o);
        for (auto& [k, p] : o.c_) set(k.first, k.second, coeff(k.first, k.second) + p);
        return *this;
    }
    TSeries& operator-=(const TSeries& o) {
        check(o);
        for (auto& [k, p] : o.c_) set(k.first, k.second, coeff(k.first, k.second) - p);
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { a += b; return a; }
    friend TSeries operator-(TSeries a, const TSeries& b) { a -= b; return a; }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check(b);
        TSeries r(a.order_);
        for (auto& [ka, pa] : a.c_) {
            for (auto& [kb, pb] : b.c_) {
                long dt = ka.first + kb.first;
                if (dt > a.order_) continue;
                long dy = ka.second + kb.second;
                r.set(dt, dy, r.coeff(dt, dy) + pa * pb);
            }
        }
        return r;
    }
    TSeries& operator*=(const TSeries& o) { *this = *this * o; return *this; }

    TSeries& scale(const QPoly& p) {
        std::map<Key, QPoly> out;
        for (auto& [k, q] : c_) {
            QPoly v = p * q;
            if (!v.is_zero()) out[k] = v;
        }
        c_ = std::move(out);
        return *this;
    }
    friend TSeries operator*(const QPoly& p, TSeries s) { s.scale(p); return s; }
    friend TSeries operator*(const Rat& r, TSeries s) { s.scale(QPoly(r)); return s; }

    /// Shift every term's y-degree up by one (multiplication by y).
    TSeries mul_y() const {
        TSeries r(order_);
        for (auto& [k, p] : c_) r.set(k.first, k.second + 1, p);
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    long min_tdeg() const {
        long m = order_ + 1;
        for (auto& [k, p] : c_) m = std::min(m, k.first);
        return m;
    }

    /// exp of a series with zero constant term and min t-degree >= 1.
    TSeries exp() const {
        if (min_tdeg() < 1) throw std::domain_error("TSeries::exp: nonzero constant term");
        TSeries r = constant(order_, QPoly(1));
        TSeries pw = constant(order_, QPoly(1));
        Rat fact = 1;
        for (long k = 1; k <= order_; ++k) {
            pw *= *this;
            if (pw.is_zero()) break;
            fact *= k;
            r += Rat(1) / fact * pw;
        }
        return r;
    }

    /// 1/this for series with constant term 1.
    TSeries reciprocal() const {
        if (coeff(0, 0) != QPoly(1)) throw std::domain_error("TSeries::reciprocal: constant term must be 1");
        TSeries rest = *this;
        rest.set(0, 0, QPoly());
        if (!rest.is_zero() && rest.min_tdeg() < 1)
            throw std::domain_error("TSeries::reciprocal: t-free non-constant part");
        TSeries r = constant(order_, QPoly(1));
        TSeries pw = constant(order_, QPoly(1));
        long sign = 1;
        for (long k = 1; k <= order_; ++k) {
            pw *= rest;
            if (pw.is_zero()) break;
            sign = -sign;
            r += Rat(sign) * pw;
        }
        return r;
    }

    /// Term-by-term antiderivative in t (constant of integration 0).
    TSeries integrate_t() const {
        TSeries r(order_);
        for (auto& [k, p] : c_) {
            if (k.first + 1 > order_) continue;
            r.set(k.first + 1, k.second, Rat(1) / Rat(k.first + 1) * p);
        }
        return r;
    }

    TSeries derive_t() const {
        TSeries r(order_);
        for (auto& [k, p] : c_) {
            if (k.first == 0) continue;
            r.set(k.first - 1, k.second, Rat(k.first) * p);
        }
        return r;
    }

    /// Substitute an exact rational for y.
    TSeries eval_y(const Rat& y) const {
        TSeries r(order_);
        for (auto& [k, p] : c_) {
            Rat f = 1;
            for (long i = 0; i < k.second; ++i) f *= y;
            r.set(k.first, 0, r.coeff(k.first, 0) + f * p);
        }
        return r;
    }

    /// Substitute an exact rational for q; coefficients become constants.
    TSeries eval_q(const Rat& q) const {
        TSeries r(order_);
        for (auto& [k, p] : c_) r.set(k.first, k.second, QPoly(p.eval(q)));
        return r;
    }

    /// Divide every coefficient exactly by (q-1); throws if any fails.
    TSeries div_qminus1() const {
        TSeries r(order_);
        for (auto& [k, p] : c_) r.set(k.first, k.second, p.div_qminus1());
        return r;
    }

private:
    void check(const TSeries& o) const {
        if (order_ != o.order_) throw std::invalid_argument("TSeries: mismatched truncation orders");
    }
    long order_;
    std::map<Key, QPoly> c_;
};

}  // namespace dcp

#endif
