#include "gw/series.hpp"

namespace gw {

Series series_mul(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    Series s(n);
    for (long i = 0; i <= n; ++i) {
        Rat acc(0);
        for (long j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        s.set_coeff(i, acc);
    }
    return s;
}

Series series_inv(const Series& a) {
    if (a.coeff(0) == 0) throw std::domain_error("series_inv: not invertible as power series");
    long n = a.order();
    Series s(n);
    Rat c0inv = 1 / a.coeff(0);
    s.set_coeff(0, c0inv);
    for (long i = 1; i <= n; ++i) {
        Rat acc(0);
        for (long j = 1; j <= i; ++j) acc += a.coeff(j) * s.coeff(i - j);
        s.set_coeff(i, -c0inv * acc);
    }
    return s;
}

Series series_pow(const Series& a, const Rat& exponent) {
    if (a.coeff(0) != 1) throw std::domain_error("series_pow: constant term must be 1");
    long n = a.order();
    // b = a - 1 has no constant term; expand sum_k C(exponent,k) b^k.
    Series result = Series::one(n);
    Series b = a;
    b.set_coeff(0, Rat(0));
    Series bpow = Series::one(n);
    Rat binom(1);
    for (long k = 1; k <= n; ++k) {
        bpow = series_mul(bpow, b);
        binom *= (exponent - (k - 1)) / k;
        result = result + binom * bpow;
    }
    return result;
}

Rat bracket(const Rat& x, long k, long p) {
    if (k < -1) throw std::invalid_argument("bracket: k must be >= -1");
    if (p < 0 || p > k + 1) throw std::out_of_range("bracket: p out of range");
    // Expand prod_{j=0}^{k} (z + x + j) as a dense polynomial in z.
    std::vector<Rat> poly{Rat(1)};
    for (long j = 0; j <= k; ++j) {
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        Rat c = x + j;
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += c * poly[i];
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    return poly[static_cast<size_t>(p)];
}

Series range_product(long lo, long hi, const std::function<Series(long)>& factor, long order) {
    Series result = Series::one(order);
    if (lo <= hi) {
        for (long i = lo; i <= hi; ++i) result = series_mul(result, factor(i));
    } else {
        for (long i = hi + 1; i <= lo - 1; ++i) result = series_mul(result, series_inv(factor(i)));
    }
    return result;
}

} // namespace gw
