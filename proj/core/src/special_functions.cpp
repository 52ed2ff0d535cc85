#include "csecs/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace csecs {

namespace {

constexpr int kFactorialTableSize = 171;

// ln(n!) accumulated from exact partial products; the running product is
// exact in double up to 22! and within one ulp per step beyond.
const std::array<double, kFactorialTableSize>& ln_factorial_table() {
    static const auto table = [] {
        std::array<double, kFactorialTableSize> t{};
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int i = 1; i < kFactorialTableSize; ++i) {
            acc += std::log(static_cast<long double>(i));
            t[i] = static_cast<double>(acc);
        }
        return t;
    }();
    return table;
}

const std::array<double, kFactorialTableSize>& factorial_table() {
    static const auto table = [] {
        std::array<double, kFactorialTableSize> t{};
        t[0] = 1.0;
        for (int i = 1; i < kFactorialTableSize; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

}  // namespace

cplx hermite(int n, cplx z) {
    if (n < 0) throw std::invalid_argument("hermite: negative order");
    cplx h_prev(1.0, 0.0);
    if (n == 0) return h_prev;
    cplx h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const cplx next = 2.0 * z * h - 2.0 * static_cast<double>(k) * h_prev;
        h_prev = h;
        h = next;
    }
    return h;
}

double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

double assoc_laguerre(int n, int k, double x) {
    if (n < 0 || k < 0) throw std::invalid_argument("assoc_laguerre: negative index");
    double l_prev = 1.0;
    if (n == 0) return l_prev;
    double l = 1.0 + k - x;
    for (int i = 1; i < n; ++i) {
        const double next = ((2.0 * i + 1.0 + k - x) * l - (i + k) * l_prev) / (i + 1.0);
        l_prev = l;
        l = next;
    }
    return l;
}

double ln_factorial(int n) {
    if (n < 0) throw std::invalid_argument("ln_factorial: negative argument");
    if (n < kFactorialTableSize) return ln_factorial_table()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n < kFactorialTableSize) return factorial_table()[n];
    return HUGE_VAL;
}

cplx hermite2_scaled(int n, cplx x, cplx y) {
    if (n < 0) throw std::invalid_argument("hermite2_scaled: negative order");
    // c_k = [s^k] exp(x s + y s²) obeys k c_k = x c_{k-1} + 2 y c_{k-2}.
    cplx c_prev(0.0, 0.0);
    cplx c(1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        const cplx next = (x * c + 2.0 * y * c_prev) / static_cast<double>(k);
        c_prev = c;
        c = next;
    }
    return c;
}

}  // namespace csecs
