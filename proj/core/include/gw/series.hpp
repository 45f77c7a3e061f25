#ifndef GW_SERIES_HPP
#define GW_SERIES_HPP

#include <functional>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Truncated formal power series over Rat. Coefficients of z^0..z^order are
// valid; querying beyond the truncation order is an error, never a silent 0.
class Series {
public:
    explicit Series(long order) : coeffs_(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }
    Series(long order, const Rat& constant) : Series(order) { coeffs_[0] = constant; }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rat& coeff(long i) const {
        check(i);
        return coeffs_[static_cast<size_t>(i)];
    }
    void set_coeff(long i, const Rat& v) {
        check(i);
        coeffs_[static_cast<size_t>(i)] = v;
    }

    static Series one(long order) { return Series(order, Rat(1)); }

    // 1 + c z, the only building block the generating functions need.
    static Series linear(long order, const Rat& c) {
        Series s(order, Rat(1));
        if (order >= 1) s.set_coeff(1, c);
        return s;
    }

    Series truncated(long new_order) const {
        if (new_order > order()) throw std::out_of_range("Series::truncated: would extend order");
        Series s(new_order);
        for (long i = 0; i <= new_order; ++i) s.coeffs_[static_cast<size_t>(i)] = coeff(i);
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        long n = std::min(a.order(), b.order());
        Series s(n);
        for (long i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) + b.coeff(i));
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) {
        long n = std::min(a.order(), b.order());
        Series s(n);
        for (long i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) - b.coeff(i));
        return s;
    }
    friend Series operator*(const Rat& c, const Series& a) {
        Series s(a.order());
        for (long i = 0; i <= a.order(); ++i) s.set_coeff(i, c * a.coeff(i));
        return s;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    void check(long i) const {
        if (i < 0 || i > order()) throw std::out_of_range("Series: coefficient index beyond truncation order");
    }
    std::vector<Rat> coeffs_;
};

// Cauchy product, truncated to the smaller operand order.
Series series_mul(const Series& a, const Series& b);

// Multiplicative inverse; requires a nonzero constant term.
Series series_inv(const Series& a);

// Generalized binomial power (1 + ...)^exponent; requires constant term 1.
Series series_pow(const Series& a, const Rat& exponent);

// [x]^k_p: the z^p-coefficient of prod_{j=0}^{k} (z + x + j), k >= -1.
Rat bracket(const Rat& x, long k, long p);

// prod_{i=lo}^{hi} factor(i), with the inverted-range convention
// prod_{i=lo}^{hi} A_i := prod_{i=hi+1}^{lo-1} A_i^{-1} when lo > hi.
Series range_product(long lo, long hi, const std::function<Series(long)>& factor, long order);

} // namespace gw

#endif
