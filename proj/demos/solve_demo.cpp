// Fixed-point iteration on x -> 1 + 0.5 sqrt(x) in the alpha = 1/2 fractal
// metric, with the contraction certificate and both error bounds.

#include <cmath>
#include <cstdio>

#include "lfc/lfc.hpp"

int main()
{
    using namespace lfc;

    const Order half(0.5);
    const TestFunction affine = affine_fractal(1.0, 0.5, half);

    IterationSettings settings{half};
    settings.tol = 1e-7;
    const ConvergenceReport rep = fixed_point_solve(affine.fn, 2.0, settings);

    std::printf("status: %s, root: %.10f after %d iterations\n", to_string(rep.status), rep.root,
                rep.iterations());
    std::printf("empirical L: %.4f, a posteriori bound: %.3e\n", rep.contraction.L_hat,
                rep.a_posteriori);

    const CertifiedContraction cert = contraction_certificate(*affine.fn.series, 1.0, 2.5, 64);
    std::printf("certified L on [1, 2.5]: %.3f (%s)\n", cert.L,
                cert.certified ? "contractive" : "not contractive");

    const double xstar = *affine.known_fixed_point;
    const double dist0 = std::pow(std::fabs(xstar - 2.0), 0.5);
    std::printf("\n%4s %14s %14s %14s\n", "k", "rho(x*,x_k)", "a priori", "a posteriori");
    for (int k = 0; k < rep.iterations(); ++k) {
        const double oracle = std::pow(std::fabs(xstar - rep.trace.iterates[k]), 0.5);
        std::printf("%4d %14.3e %14.3e %14.3e\n", k, oracle, apriori_bound(cert.L, dist0, k, half),
                    aposteriori_bound(cert.L, rep.trace.fractal_steps[k]));
    }

    // classical reduction: Newton on x^2 - 2 at alpha = 1
    const auto cat = catalog(Order(1.0));
    for (const auto& t : cat)
        if (t.name == "quadratic") {
            const ConvergenceReport n =
                newton_solve(t.fn, 1.0, IterationSettings{Order(1.0)},
                             NewtonVariant::base_coordinate);
            std::printf("\nnewton on x^2 - 2: root %.12f in %d steps\n", n.root, n.iterations());
        }
    return 0;
}
