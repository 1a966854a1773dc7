// Builds the alpha = 1/2 Mittag-Leffler series, checks it against its own
// derivative, and prints the truncation error next to the remainder bound.

#include <cmath>
#include <cstdio>

#include "lfc/lfc.hpp"

int main()
{
    using namespace lfc;

    const Order half(0.5);
    const int K = 40;
    const PowerSeries E = mittag_leffler(half, K);
    const PowerSeries DE = lfd(E);

    // closed form of the same sum: exp(z^2)(1 + erf z) at z = sqrt(x)
    auto closed = [](double x) {
        const double z = std::sqrt(x);
        return std::exp(z * z) * (1.0 + std::erf(z));
    };

    std::printf("%6s %14s %14s %14s %14s\n", "x", "series", "closed", "deriv", "remainder");
    for (int i = 0; i <= 8; ++i) {
        const double x = i / 8.0;
        const double bound = taylor_remainder({half, 1.0, K, x});
        std::printf("%6.3f %14.10f %14.10f %14.10f %14.3e\n", x, eval(E, x), closed(x),
                    eval(DE, x), bound);
    }

    // the derivative is a pure coefficient shift, so integrating it back
    // recovers the series exactly except for the constant term
    const PowerSeries back = integral(DE);
    std::printf("\nintegral(lfd(E)) matches E above the constant term: %s\n",
                std::vector(E.coeffs().begin() + 1, E.coeffs().end())
                        == std::vector(back.coeffs().begin() + 1, back.coeffs().end())
                    ? "yes"
                    : "no");
    return 0;
}
