#include "stirling/gammafn.hpp"

#include <cmath>
#include <stdexcept>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

// Lanczos approximation, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

Complex log_gamma_half_plane(Complex z) {
    // Valid for Re z >= 0.5.
    Complex sum(kLanczosCoeff[0], 0.0);
    for (int i = 1; i < 15; ++i) sum += kLanczosCoeff[i] / (z - 1.0 + static_cast<double>(i));
    Complex t = z + (kLanczosG - 0.5);
    return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.real() >= 0.5) return log_gamma_half_plane(z);
    long m;
    if (near_gamma_pole(z, m))
        throw pole_error("log_gamma at a pole", "z = " + std::to_string(z.real()));
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_half_plane(1.0 - z);
}

bool near_gamma_pole(Complex z, long& m, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    if (std::abs(z.real() - r) > tol) return false;
    if (r > 0.5) return false;
    m = static_cast<long>(r);
    return true;
}

Complex gamma_ratio(Complex a, Complex b) {
    long ma, mb;
    bool pa = near_gamma_pole(a, ma);
    bool pb = near_gamma_pole(b, mb);
    if (pa && pb) {
        // Both at poles: lim Gamma(ma+t)/Gamma(mb+t) = (-1)^{ma-mb} (-mb)!/(-ma)!.
        Complex lg = log_gamma(Complex(1.0 - static_cast<double>(mb), 0.0)) -
                     log_gamma(Complex(1.0 - static_cast<double>(ma), 0.0));
        double s = ((ma - mb) % 2 == 0) ? 1.0 : -1.0;
        return s * std::exp(lg);
    }
    if (pb) return Complex(0.0, 0.0);
    if (pa)
        throw pole_error("Gamma ratio with a non-cancelling numerator pole",
                         "numerator argument = " + std::to_string(a.real()));
    return std::exp(log_gamma(a) - log_gamma(b));
}

Complex k_gamma(Complex z, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("k_gamma requires k > 0");
    Complex w = z / k;
    return std::exp((w - 1.0) * std::log(k) + log_gamma(w));
}

Complex k_gamma_limit_probe(Complex z, double k, unsigned long n) {
    if (!(k > 0.0)) throw std::invalid_argument("k_gamma_limit_probe requires k > 0");
    if (n == 0) throw std::invalid_argument("k_gamma_limit_probe requires n >= 1");
    // log(n!) + n log k + (z/k - 1) log(nk) - sum_j log(z + j k).
    Complex w = z / k;
    double nn = static_cast<double>(n);
    Complex acc = log_gamma(Complex(nn + 1.0, 0.0)) + nn * std::log(k) +
                  (w - 1.0) * std::log(nn * k);
    for (unsigned long j = 0; j < n; ++j) acc -= std::log(z + static_cast<double>(j) * k);
    return std::exp(acc);
}

}  // namespace stirling
