#include "modulilog/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace modulilog {

namespace {

using Complex = std::complex<double>;

struct KahanSum {
    Complex sum{0.0};
    Complex carry{0.0};

    void add(Complex v) {
        const Complex y = v - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Upper bound for sum_{j > k} |x|^j (1 + ln j)^{m-1} / j^s / (m-1)!, valid
// once (1 + ln t)^{m-1} t^{-s} is decreasing on [k, inf). The inner count of
// ordered tuples below j is bounded by H_{j-1}^{m-1}/(m-1)! <= (1+ln j)^{m-1}/(m-1)!.
double tail_bound(int m, int s, double x_abs, double k) {
    double factorial = 1.0;
    for (int j = 2; j < m; ++j) factorial *= j;
    if (x_abs < 1.0) {
        const double envelope =
            std::pow(1.0 + std::log(k + 1.0), m - 1) / std::pow(k + 1.0, s);
        const double geometric = std::pow(x_abs, k + 1.0) / (1.0 - x_abs);
        return envelope * geometric / factorial;
    }
    // |x_m| = 1 needs s >= 2: integral comparison with the incomplete gamma
    // function, sum_{j>k} <= e^{s-1}/(s-1)^m * Gamma(m, (s-1)(1+ln k)) / (m-1)!
    const double sm1 = s - 1.0;
    const double x0 = sm1 * (1.0 + std::log(k));
    double partial = 0.0, term = 1.0; // sum_{j<m} x0^j / j!
    for (int j = 0; j < m; ++j) {
        partial += term;
        term *= x0 / (j + 1.0);
    }
    return std::exp(sm1 - x0) / std::pow(sm1, m) * partial;
}

} // namespace

PolylogIndex::PolylogIndex(std::vector<int> idx, bool allow_tail)
    : indices(std::move(idx)), allow_divergent_tail(allow_tail) {
    if (indices.empty()) fail("precondition", "polylog index must be non-empty");
    if (indices.size() > 16) fail("precondition", "polylog depth limited to 16");
    for (int v : indices)
        if (v < 1) fail("precondition", "polylog index entries must be >= 1");
}

int PolylogIndex::weight() const {
    int w = 0;
    for (int v : indices) w += v;
    return w;
}

SeriesResult polylog_series(const PolylogIndex& idx, std::span<const Complex> x, double tol,
                            long max_terms) {
    const int m = idx.depth();
    if (static_cast<int>(x.size()) != m)
        fail("precondition", "polylog needs exactly one argument per index entry");
    if (tol <= 0.0) fail("precondition", "tol must be positive");
    if (max_terms < 1) fail("precondition", "max_terms must be positive");
    for (const Complex& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail("precondition", "polylog arguments must be finite");
        if (std::abs(v) > 1.0)
            fail("precondition", "polylog series requires |x_i| <= 1");
    }

    const double x_last = std::abs(x[m - 1]);
    const int s_last = idx.indices[m - 1];
    if (!idx.convergent_shape()) {
        if (!idx.allow_divergent_tail)
            fail("divergent_series",
                 "index shape needs a last entry >= 2 (or the divergent-tail override)");
        if (!(x_last < 1.0))
            fail("divergent_series", "divergent-shape override needs |x_m| < 1");
    }
    if (x_last == 1.0 && s_last < 2)
        fail("divergent_series", "series diverges for |x_m| = 1 with tail exponent 1");

    // the tail envelope is monotone only past this point
    const long check_from =
        std::max<long>(8, static_cast<long>(std::ceil(std::exp(double(m - 1) / s_last))));

    std::vector<KahanSum> level(m);
    std::vector<Complex> power(m, Complex(1.0));

    for (long k = 1; k <= max_terms; ++k) {
        const double kd = static_cast<double>(k);
        for (int l = m; l >= 1; --l) {
            power[l - 1] *= x[l - 1];
            double kpow = kd;
            for (int e = 1; e < idx.indices[l - 1]; ++e) kpow *= kd;
            const Complex inner = l == 1 ? Complex(1.0) : level[l - 2].sum;
            level[l - 1].add(power[l - 1] * (1.0 / kpow) * inner);
        }
        if (k >= check_from && (k & 255) == 0) {
            const double bound = tail_bound(m, s_last, x_last, kd);
            if (bound <= tol) return SeriesResult{level[m - 1].sum, bound, k};
        }
    }

    const double bound = tail_bound(m, s_last, x_last, static_cast<double>(max_terms));
    if (bound <= tol) return SeriesResult{level[m - 1].sum, bound, max_terms};
    std::ostringstream msg;
    msg << "series tail bound " << bound << " still above tol after max_terms terms";
    fail("budget_exhausted", msg.str());
}

SeriesResult mzv(const PolylogIndex& idx, double tol, long max_terms) {
    if (!idx.convergent_shape())
        fail("divergent_series", "zeta values need the last index entry >= 2");
    PolylogIndex strict(idx.indices, false);
    const std::vector<Complex> ones(idx.depth(), Complex(1.0));
    return polylog_series(strict, ones, tol, max_terms);
}

} // namespace modulilog
