#include "qcore.hpp"

#include <array>
#include <mutex>
#include <vector>

#include "ezeta/arithmetic.hpp"
#include "ezeta/types.hpp"

namespace ezeta::detail {

qreal ipow_q(qreal b, long e)
{
    qreal r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace {

// zeta(2m) = rational * pi^{2m} for 2m <= 16.
struct EvenZeta {
    int k;
    long long num, den;
};
constexpr EvenZeta even_zeta_table[] = {
    {2, 1, 6},       {4, 1, 90},        {6, 1, 945},          {8, 1, 9450},
    {10, 1, 93555},  {12, 691, 638512875LL},
    {14, 2, 18243225LL},                {16, 3617, 325641566250LL},
};

qreal zeta_sum_em(int k)
{
    // direct sum to N plus the integral tail and Euler-Maclaurin
    // corrections through B6; remainder ~ k^8 N^{-k-7}.
    long n_top = 40000;
    if (k >= 5) n_top = 4000;
    if (k >= 8) n_top = 1000;
    if (k >= 12) n_top = 300;
    qreal sum = 0;
    for (long n = n_top - 1; n >= 1; --n) sum += ipow_q(qreal(1) / qreal(n), k);
    const qreal N = qreal(n_top);
    const qreal invN = 1 / N;
    const qreal f = ipow_q(invN, k);  // N^{-k}
    qreal kk = qreal(k);
    sum += f * N / (kk - 1);          // integral tail
    sum += f / 2;
    sum += kk * f * invN / 12;
    sum -= kk * (kk + 1) * (kk + 2) * f * invN * invN * invN / 720;
    sum += kk * (kk + 1) * (kk + 2) * (kk + 3) * (kk + 4) * f * ipow_q(invN, 5) / 30240;
    return sum;
}

std::array<qreal, 64> build_zeta()
{
    std::array<qreal, 64> z{};
    for (int k = 2; k < 64; ++k) {
        bool even_closed = false;
        for (const auto& e : even_zeta_table)
            if (e.k == k) {
                z[k] = qreal(e.num) / qreal(e.den) * ipow_q(q_pi(), k);
                even_closed = true;
            }
        if (!even_closed) z[k] = zeta_sum_em(k);
    }
    return z;
}

std::array<qreal, 64> build_beta()
{
    // Cohen-Rodriguez Villegas-Zagier acceleration of
    // sum (-1)^n (2n+1)^{-s}; error ~ (3+sqrt 8)^{-n_acc}.
    std::array<qreal, 64> b{};
    const int n_acc = 52;
    for (int s = 1; s < 64; ++s) {
        qreal d = ipow_q(3 + 2 * sqrtq(qreal(2)), n_acc);
        d = (d + 1 / d) / 2;
        qreal bb = -1, c = -d, acc = 0;
        for (int kk = 0; kk < n_acc; ++kk) {
            c = bb - c;
            acc += c * ipow_q(qreal(1) / qreal(2 * kk + 1), s);
            bb *= qreal(kk + n_acc) * (kk - n_acc) / ((kk + qreal(0.5)) * (kk + 1));
        }
        b[s] = acc / d;
    }
    return b;
}

const std::array<qreal, 64>& zeta_table()
{
    static const std::array<qreal, 64> t = build_zeta();
    return t;
}
const std::array<qreal, 64>& beta_table()
{
    static const std::array<qreal, 64> t = build_beta();
    return t;
}

qreal factorial_q(int n)
{
    qreal r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

const std::vector<long long>& op_coeffs(int m)
{
    static std::mutex mu;
    static std::vector<std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    while ((int)cache.size() <= m) cache.push_back(derivative_operator((int)cache.size()).c);
    return cache[m];
}

} // namespace

qreal zeta_q(int k)
{
    if (k < 2 || k >= 64) throw domain_error("zeta_q: k out of range");
    return zeta_table()[k];
}

qreal beta_q(int s)
{
    if (s < 1 || s >= 64) throw domain_error("beta_q: s out of range");
    return beta_table()[s];
}

qreal sigma_neg_q(int k, long n)
{
    qreal acc = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        acc += ipow_q(qreal(1) / qreal(d), k);
        long e = n / d;
        if (e != d) acc += ipow_q(qreal(1) / qreal(e), k);
    }
    return acc;
}

qreal leading_coeff_q(int s)
{
    // sqrt(pi) Gamma(s - 1/2) / Gamma(s) = pi (2s-2)! / (4^{s-1} ((s-1)!)^2)
    qreal binom = factorial_q(2 * s - 2) / (factorial_q(s - 1) * factorial_q(s - 1));
    return q_pi() * binom / ipow_q(qreal(4), s - 1) * zeta_q(2 * s - 1) / zeta_q(2 * s);
}

namespace {

// e^{-u} sum_k c_{m,k} u^{-k}; the common core of the half-integer K-Bessel
// closed form and the operator expansion.
qreal khalf_core(const std::vector<long long>& c, int m, qreal u)
{
    qreal inv = 1 / u, p = 1, acc = 0;
    for (int k = 0; k <= m; ++k) {
        acc += qreal(c[k]) * p;
        p *= inv;
    }
    return expq(-u) * acc;
}

struct Leading {
    qreal value;
};

Leading leading_terms(qreal y, int s)
{
    return {ipow_q(y, s) + leading_coeff_q(s) * ipow_q(qreal(1) / y, s - 1)};
}

} // namespace

SeriesOut fourier_series_part_q(qreal x, qreal y, int s, long n_max)
{
    const int m = s - 1;
    const auto& c = op_coeffs(m);
    const qreal P = 2 * ipow_q(q_pi(), s) / (factorial_q(s - 1) * zeta_q(2 * s));
    const qreal two_pi = 2 * q_pi();
    const qreal sqy = sqrtq(y);
    const long cap = n_max > 0 ? n_max : 5000;
    const bool autostop = n_max <= 0;

    qreal sum = 0, absval = 0, scale = 1 + q_abs(leading_terms(y, s).value);
    long n = 0;
    qreal last_mag = 0;
    while (n < cap) {
        ++n;
        const qreal u = two_pi * qreal(n) * y;
        const qreal core = khalf_core(c, m, u);
        const qreal mag = P * 2 * ipow_q(qreal(n), m) * sqrtq(qreal(n)) *
                          sigma_neg_q(2 * s - 1, n) * sqy * sqrtq(q_pi() / (2 * u)) * core;
        sum += mag * cosq(two_pi * qreal(n) * x);
        absval += q_abs(mag);
        last_mag = q_abs(mag);
        if (autostop && n >= 4) {
            // termwise ratio bound: e^{-2 pi y} (1+1/n)^{s+1} covers the
            // power, divisor and Bessel factors
            qreal r = expq(-two_pi * y) * ipow_q((qreal(n) + 1) / qreal(n), s + 1);
            if (r < 1 && last_mag * r / (1 - r) < qreal(1e-33) * (scale + q_abs(sum))) break;
        }
    }
    qreal r = expq(-two_pi * y) * ipow_q((qreal(n) + 1) / qreal(n), s + 1);
    qreal tail = r < 1 ? last_mag * r / (1 - r) : last_mag;
    return {sum, tail, n};
}

SeriesOut fourier_q(qreal x, qreal y, int s, long n_max)
{
    SeriesOut tail = fourier_series_part_q(x, y, s, n_max);
    return {leading_terms(y, s).value + tail.value, tail.tail, tail.work};
}

SeriesOut ramanujan1_q(qreal x, qreal y, int m, long n_max)
{
    const int s = m + 1;
    const auto& c = op_coeffs(m);
    const qreal two_pi = 2 * q_pi();
    // -pi y^m / ((-2)^{m-1} m! zeta(2m+2)), with (-2)^{m-1} = (-1)^{m-1} 2^{m-1}
    qreal pref = -q_pi() * ipow_q(y, m) / (ipow_q(qreal(2), m - 1) * factorial_q(m) * zeta_q(2 * m + 2));
    if (m % 2 == 0) pref = -pref;
    const long cap = n_max > 0 ? n_max : 5000;
    const bool autostop = n_max <= 0;

    qreal lead = leading_terms(y, s).value;
    qreal sum = 0, last_mag = 0;
    long n = 0;
    while (n < cap) {
        ++n;
        const qreal alpha = two_pi * qreal(n);
        // (d/dy 1/y)^m e^{-alpha y} = (-1)^m e^{-alpha y} sum_k c_k alpha^{m-k} y^{-(m+k)}
        qreal poly = 0;
        for (int k = 0; k <= m; ++k)
            poly += qreal(c[k]) * ipow_q(alpha, m - k) * ipow_q(qreal(1) / y, m + k);
        qreal dm = expq(-alpha * y) * poly;
        if (m % 2) dm = -dm;
        const qreal term = pref * sigma_neg_q(2 * m + 1, n) * cosq(two_pi * qreal(n) * x) * dm;
        sum += term;
        last_mag = q_abs(pref * sigma_neg_q(2 * m + 1, n) * dm);
        if (autostop && n >= 4) {
            qreal r = expq(-two_pi * y) * ipow_q((qreal(n) + 1) / qreal(n), s + 1);
            if (r < 1 && last_mag * r / (1 - r) < qreal(1e-33) * (1 + q_abs(lead) + q_abs(sum)))
                break;
        }
    }
    qreal r = expq(-two_pi * y) * ipow_q((qreal(n) + 1) / qreal(n), s + 1);
    qreal tail = r < 1 ? last_mag * r / (1 - r) : last_mag;
    return {lead + sum, tail, n};
}

qreal ramanujan1_partial_q(qreal x, qreal y, int m, long n_terms)
{
    const auto& c = op_coeffs(m);
    const qreal two_pi = 2 * q_pi();
    qreal pref = -q_pi() * ipow_q(y, m) / (ipow_q(qreal(2), m - 1) * factorial_q(m) * zeta_q(2 * m + 2));
    if (m % 2 == 0) pref = -pref;
    qreal lead = leading_terms(y, m + 1).value;
    qreal sum = 0;
    for (long n = 1; n <= n_terms; ++n) {
        const qreal alpha = two_pi * qreal(n);
        qreal poly = 0;
        for (int k = 0; k <= m; ++k)
            poly += qreal(c[k]) * ipow_q(alpha, m - k) * ipow_q(qreal(1) / y, m + k);
        qreal dm = expq(-alpha * y) * poly;
        if (m % 2) dm = -dm;
        sum += pref * sigma_neg_q(2 * m + 1, n) * cosq(two_pi * qreal(n) * x) * dm;
    }
    return lead + sum;
}

SeriesOut ramanujan4_q(qreal x, qreal y, int m, qreal term_cut, long max_terms)
{
    const auto& c = op_coeffs(m);
    const qreal pi = q_pi();
    const qreal pow4m = ipow_q(qreal(2), 2 * m + 2);  // 2^{2m+2}
    // (2^{2m+1}-1)/(2^{2m+2}-1) * sqrt(pi) Gamma(m+1/2) / (2 m!) * zeta ratio,
    // with sqrt(pi) Gamma(m+1/2) = pi (2m)! / (4^m m!)
    const qreal first = (pow4m / 2 - 1) / (pow4m - 1) * pi *
                        (factorial_q(2 * m) / (ipow_q(qreal(4), m) * factorial_q(m))) /
                        (2 * factorial_q(m)) * zeta_q(2 * m + 1) / zeta_q(2 * m + 2) /
                        ipow_q(4 * y, m);
    // + pi y^m / ((-2)^{m-1} (2^{2m+2}-1) m! zeta(2m+2)) applied to the
    // operator series; (-1)^m from the operator against (-1)^{m-1} of the
    // prefactor leaves -2^{1-m} pi y^m / ((2^{2m+2}-1) m! zeta(2m+2))
    // on the sign-free core, for every m.
    const qreal pref = -q_pi() * ipow_q(y, m) / (ipow_q(qreal(2), m - 1) * (pow4m - 1) *
                                                 factorial_q(m) * zeta_q(2 * m + 2));

    auto op_poly = [&](qreal alpha) {
        qreal poly = 0;
        for (int k = 0; k <= m; ++k)
            poly += qreal(c[k]) * ipow_q(alpha, m - k) * ipow_q(qreal(1) / y, m + k);
        return poly;
    };

    qreal sum = 0;
    long work = 0;
    const qreal phase = pi * (2 * x + 1);
    for (long n = 0; n < 100000; ++n) {
        const qreal odd = qreal(2 * n + 1);
        const qreal odd_pow = ipow_q(1 / odd, 2 * m + 1);
        qreal bound1 = 0;
        for (long l = 1; l <= max_terms; ++l) {
            const qreal alpha = 2 * pi * odd * qreal(l);
            const qreal bound = odd_pow * expq(-alpha * y) * op_poly(alpha);
            if (l == 1) bound1 = bound;
            // bounds grow until alpha y passes the hump at ~m, then decay
            if (bound < term_cut && alpha * y > qreal(m + 1)) break;
            ++work;
            if (work > max_terms) throw truncation_error("ramanujan4: term budget exhausted");
            const qreal sgn = (l % 2) ? qreal(1) : qreal(-1);
            sum += sgn * odd_pow * cosq(odd * qreal(l) * phase) * expq(-alpha * y) * op_poly(alpha);
        }
        if (bound1 < term_cut && 2 * pi * odd * y > qreal(m + 1)) break;
    }
    return {first + pref * sum, term_cut * 4, work};
}

void sl2z_reduce_q(qreal& x, qreal& y)
{
    for (int i = 0; i < 400; ++i) {
        x -= rintq(x);
        const qreal n2 = x * x + y * y;
        if (n2 >= 1) return;
        x = -x / n2;
        y = y / n2;
    }
    throw accuracy_error("sl2z_reduce: no convergence");
}

SeriesOut fourier_reduced_q(qreal x, qreal y, int s, long n_max)
{
    sl2z_reduce_q(x, y);
    return fourier_q(x, y, s, n_max);
}

SeriesOut level_n_q(qreal x, qreal y, int s, int level, long n_max)
{
    if (level < 1) throw domain_error("level_n: N >= 1 required");
    qreal acc = 0, tail = 0;
    long work = 0;
    for (long long d : divisors(level)) {
        const int mu = mobius(d);
        if (!mu) continue;
        SeriesOut e = fourier_reduced_q(qreal(level) * x / qreal(d),
                                        qreal(level) * y / qreal(d), s, n_max);
        const qreal w = qreal(mu) * ipow_q(qreal(1) / qreal(d), s);
        acc += w * e.value;
        tail += q_abs(w) * e.tail;
        work += e.work;
    }
    // 1 / (N^s prod_{p | N} (1 - p^{-2s}))
    qreal pref = ipow_q(qreal(1) / qreal(level), s);
    long long rem = level;
    for (long long p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        pref /= 1 - ipow_q(qreal(1) / qreal(p), 2 * s);
        while (rem % p == 0) rem /= p;
    }
    if (rem > 1) pref /= 1 - ipow_q(qreal(1) / qreal(rem), 2 * s);
    return {pref * acc, pref * tail, work};
}

} // namespace ezeta::detail
