#pragma once

#include "homleib/rational.hpp"

#include <algorithm>
#include <vector>

namespace homleib {

// Element of Q[lambda]/(lambda^(order+1)). The order travels with the
// value; combining values takes the larger order, so rational constants
// (order 0) mix freely with truncated series.
class TruncPoly {
  public:
    TruncPoly() : coeff_(1, Rational(0)) {}
    TruncPoly(int c) : coeff_(1, Rational(c)) {}
    explicit TruncPoly(Rational c) : coeff_{std::move(c)} {}
    TruncPoly(std::vector<Rational> coeff) : coeff_(std::move(coeff)) {
        if (coeff_.empty())
            coeff_.assign(1, Rational(0));
    }

    static TruncPoly lambdaTimes(const Rational &c, std::size_t order) {
        std::vector<Rational> v(order + 1, Rational(0));
        if (order >= 1)
            v[1] = c;
        return TruncPoly(std::move(v));
    }

    static TruncPoly constant(const Rational &c, std::size_t order) {
        std::vector<Rational> v(order + 1, Rational(0));
        v[0] = c;
        return TruncPoly(std::move(v));
    }

    std::size_t order() const { return coeff_.size() - 1; }

    const Rational &coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < coeff_.size() ? coeff_[k] : zero;
    }

    TruncPoly operator+(const TruncPoly &o) const {
        std::vector<Rational> v(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = coeff(i) + o.coeff(i);
        return TruncPoly(std::move(v));
    }

    TruncPoly operator-(const TruncPoly &o) const {
        std::vector<Rational> v(std::max(coeff_.size(), o.coeff_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = coeff(i) - o.coeff(i);
        return TruncPoly(std::move(v));
    }

    TruncPoly operator-() const {
        std::vector<Rational> v(coeff_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = -coeff_[i];
        return TruncPoly(std::move(v));
    }

    TruncPoly operator*(const TruncPoly &o) const {
        std::size_t n = std::max(coeff_.size(), o.coeff_.size());
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] == 0)
                continue;
            for (std::size_t j = 0; j < o.coeff_.size() && i + j < n; ++j)
                v[i + j] += coeff_[i] * o.coeff_[j];
        }
        return TruncPoly(std::move(v));
    }

    bool operator==(const TruncPoly &o) const {
        std::size_t n = std::max(coeff_.size(), o.coeff_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (!(coeff(i) == o.coeff(i)))
                return false;
        return true;
    }

  private:
    std::vector<Rational> coeff_; // coeff_[k] multiplies lambda^k
};

inline std::string scalarToString(const TruncPoly &p) {
    std::string s;
    for (std::size_t k = 0; k <= p.order(); ++k) {
        if (p.coeff(k) == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += rationalToString(p.coeff(k));
        if (k == 1)
            s += "*L";
        else if (k > 1)
            s += "*L^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

} // namespace homleib
