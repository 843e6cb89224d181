#include "altlin/moyal.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>

namespace altlin {

namespace {

constexpr double kDropTol = 1e-300;  // only exact/underflow zeros are removed

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void append_double(std::string& out, double v) {
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::general, 17);
    out.append(buf.data(), res.ptr);
}

}  // namespace

void PhasePoly::trim(const Key& k) {
    auto it = c_.find(k);
    if (it != c_.end() && std::abs(it->second.real()) < kDropTol &&
        std::abs(it->second.imag()) < kDropTol)
        c_.erase(it);
}

PhasePoly PhasePoly::constant(Coeff c) { return monomial(0, 0, c); }

PhasePoly PhasePoly::monomial(int i, int j, Coeff c) {
    PhasePoly f;
    if (c != Coeff(0.0)) f.c_[{i, j}] = c;
    return f;
}

PhasePoly PhasePoly::q() { return monomial(1, 0); }
PhasePoly PhasePoly::p() { return monomial(0, 1); }

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
    for (const auto& [k, v] : o.c_) {
        c_[k] += v;
        trim(k);
    }
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
    for (const auto& [k, v] : o.c_) {
        c_[k] -= v;
        trim(k);
    }
    return *this;
}

PhasePoly& PhasePoly::operator*=(Coeff c) {
    if (c == Coeff(0.0)) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= c;
    return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    PhasePoly out;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_)
            out.c_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    for (auto it = out.c_.begin(); it != out.c_.end();) {
        if (std::abs(it->second.real()) < kDropTol && std::abs(it->second.imag()) < kDropTol)
            it = out.c_.erase(it);
        else
            ++it;
    }
    return out;
}

PhasePoly PhasePoly::dq() const {
    PhasePoly out;
    for (const auto& [k, v] : c_)
        if (k.first > 0) out.c_[{k.first - 1, k.second}] = v * Coeff(k.first);
    return out;
}

PhasePoly PhasePoly::dp() const {
    PhasePoly out;
    for (const auto& [k, v] : c_)
        if (k.second > 0) out.c_[{k.first, k.second - 1}] = v * Coeff(k.second);
    return out;
}

PhasePoly::Coeff PhasePoly::eval(double q, double p) const {
    Coeff acc = 0.0;
    for (const auto& [k, v] : c_)
        acc += v * std::pow(q, k.first) * std::pow(p, k.second);
    return acc;
}

PhasePoly PhasePoly::substitute(const PhasePoly& qs, const PhasePoly& ps) const {
    // Memoized powers of the substituted variables.
    std::vector<PhasePoly> qpow{PhasePoly::constant(1.0)};
    std::vector<PhasePoly> ppow{PhasePoly::constant(1.0)};
    auto power = [](std::vector<PhasePoly>& cache, const PhasePoly& base, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    PhasePoly out;
    for (const auto& [k, v] : c_)
        out += v * (power(qpow, qs, k.first) * power(ppow, ps, k.second));
    return out;
}

int PhasePoly::degree() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
    return d;
}

double PhasePoly::coeff_distance(const PhasePoly& o) const {
    double worst = 0.0;
    for (const auto& [k, v] : c_) {
        auto it = o.c_.find(k);
        Coeff other = it == o.c_.end() ? Coeff(0.0) : it->second;
        worst = std::max(worst, std::abs(v - other));
    }
    for (const auto& [k, v] : o.c_)
        if (!c_.count(k)) worst = std::max(worst, std::abs(v));
    return worst;
}

double PhasePoly::max_imag_coeff() const {
    double worst = 0.0;
    for (const auto& [k, v] : c_) worst = std::max(worst, std::abs(v.imag()));
    return worst;
}

std::string PhasePoly::serialize() const {
    std::string out;
    for (const auto& [k, v] : c_) {  // std::map iterates keys in sorted order
        out += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):";
        append_double(out, v.real());
        out += v.imag() < 0.0 ? "-" : "+";
        append_double(out, std::abs(v.imag()));
        out += "i\n";
    }
    return out;
}

PhasePoly star(const PhasePoly& f, const PhasePoly& g, double hbar) {
    const int kmax = std::max(0, std::min(f.degree(), g.degree()));

    // Derivative tables d[a][b] = dq^a dp^b of each factor.
    auto table = [kmax](const PhasePoly& h) {
        std::vector<std::vector<PhasePoly>> t(kmax + 1, std::vector<PhasePoly>(kmax + 1));
        t[0][0] = h;
        for (int a = 0; a <= kmax; ++a)
            for (int b = 0; b <= kmax - a; ++b) {
                if (a > 0) t[a][b] = t[a - 1][b].dq();
                else if (b > 0) t[a][b] = t[a][b - 1].dp();
            }
        return t;
    };
    auto tf = table(f), tg = table(g);

    PhasePoly out;
    std::complex<double> prefactor(1.0, 0.0);  // (i hbar / 2)^k / k!
    const std::complex<double> ih2(0.0, hbar / 2.0);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) prefactor *= ih2 / static_cast<double>(k);
        for (int j = 0; j <= k; ++j) {
            double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
            PhasePoly term = tf[j][k - j] * tg[k - j][j];
            out += term * (prefactor * binom(k, j) * sign);
        }
    }
    return out;
}

PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, double hbar) {
    if (hbar == 0.0)
        throw DivisionByZero("moyal_bracket: hbar = 0 (take the Poisson bracket instead)");
    PhasePoly diff = star(f, g, hbar) - star(g, f, hbar);
    return diff * PhasePoly::Coeff(0.0, -1.0 / hbar);  // 1/(i hbar)
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
    return f.dq() * g.dp() - f.dp() * g.dq();
}

PhasePoly star_in_chart(const PhasePoly& f, const PhasePoly& g, double hbar, Chart) {
    return star(f, g, hbar);
}

PhasePoly compose_into_chart(const PhasePoly& f_qp, const KTransform& t) {
    const double lam = t.lambda();
    // q = Q (1 + lambda (Q^2 + P^2)), p = P (1 + lambda (Q^2 + P^2))
    PhasePoly Q = PhasePoly::q(), P = PhasePoly::p();
    PhasePoly warp = PhasePoly::constant(1.0) + (Q * Q + P * P) * PhasePoly::Coeff(lam);
    return f_qp.substitute(Q * warp, P * warp);
}

double chart_limit_bracket(const PhasePoly& f_qp, const PhasePoly& g_qp, const KTransform& t,
                           const Eigen::Vector2d& qp_point, const std::vector<double>& hbars) {
    if (hbars.empty()) throw DomainError("chart_limit_bracket: no hbar values");
    Eigen::Vector2d QP = t.inverse(qp_point);
    PhasePoly fc = compose_into_chart(f_qp, t);
    PhasePoly gc = compose_into_chart(g_qp, t);

    std::vector<double> h(hbars), v;
    v.reserve(h.size());
    for (double hb : h)
        v.push_back(moyal_bracket(fc, gc, hb).eval(QP(0), QP(1)).real());

    // Neville interpolation in hbar^2 evaluated at 0 (the error series holds
    // only even powers).
    for (std::size_t level = 1; level < v.size(); ++level) {
        for (std::size_t i = 0; i + level < v.size(); ++i) {
            double r = std::pow(h[i] / h[i + level], 2.0);
            v[i] = (r * v[i + 1] - v[i]) / (r - 1.0);
        }
    }
    return v[0];
}

double fitted_classical_order(const PhasePoly& f, const PhasePoly& g,
                              const std::vector<double>& hbars) {
    PhasePoly pb = poisson_bracket(f, g);
    std::vector<double> xs, ys;
    for (double hb : hbars) {
        double d = moyal_bracket(f, g, hb).coeff_distance(pb);
        if (d < 1e-18) continue;  // bracket is classical already
        xs.push_back(std::log(hb));
        ys.push_back(std::log(d));
    }
    if (xs.size() < 2) return std::numeric_limits<double>::infinity();
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// sampled star product (finite-difference bidifferential stencils)
// ---------------------------------------------------------------------------

namespace {

// Fornberg weights for the m-th derivative at 0 on the grid x[0..n-1].
std::vector<double> fornberg_weights(int m, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0];
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = x[i];
        for (int j = 0; j < i; ++j) {
            double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

}  // namespace

std::complex<double> sampled_star(const std::function<double(double, double)>& f,
                                  const std::function<double(double, double)>& g,
                                  double q, double p, double hbar, int max_order, double step) {
    const int half = max_order / 2 + 3;  // 9-point stencils at max_order <= 4
    std::vector<double> offsets(2 * half + 1);
    for (int i = 0; i <= 2 * half; ++i) offsets[i] = (i - half) * step;

    // Weight rows per derivative order on the normalized stencil.
    std::vector<std::vector<double>> w(max_order + 1);
    for (int m = 0; m <= max_order; ++m) w[m] = fornberg_weights(m, offsets);

    auto partial = [&](const std::function<double(double, double)>& h, int a, int b) {
        double acc = 0.0;
        for (int i = 0; i <= 2 * half; ++i)
            for (int j = 0; j <= 2 * half; ++j)
                acc += w[a][i] * w[b][j] * h(q + offsets[i], p + offsets[j]);
        return acc;
    };

    std::complex<double> out = 0.0;
    std::complex<double> prefactor(1.0, 0.0);
    const std::complex<double> ih2(0.0, hbar / 2.0);
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) prefactor *= ih2 / static_cast<double>(k);
        for (int j = 0; j <= k; ++j) {
            double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
            out += prefactor * binom(k, j) * sign * partial(f, j, k - j) * partial(g, k - j, j);
        }
    }
    return out;
}

}  // namespace altlin
