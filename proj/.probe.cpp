#include <cstdio>
#include "parton/parton_state.hpp"
using namespace parton;
int main() {
    auto tau = CoefficientStream::tau_stream(10000);
    const int NQ = 2000;
    for (long long p : {2LL}) {
        QSeries f = QSeries::from_stream(tau, static_cast<int>(NQ * p));
        QSeries oracle = uv_on_qseries(f, p, QSeriesOp::T, 12, {1.0, 0.0});
        std::map<long long, PartonState> states;
        for (long long q : primes_up_to(NQ * p)) states.emplace(q, decompose(tau, q, 15, false));
        auto t_applied = hecke_apply(states.at(p), HeckeVariant::I).state;
        auto patched = states;
        patched.at(p) = t_applied;
        double worst = 0; long long worstn = 0;
        for (long long n = 1; n <= NQ; ++n) {
            cplx b = reconstruct(patched, n);
            cplx want = oracle.a[(size_t)n];
            double r = std::abs(b - want) / std::max(1.0, std::abs(want));
            if (r > worst) { worst = r; worstn = n; }
        }
        std::printf("p=%lld worst %.3e at n=%lld\n", p, worst, worstn);
        long long n = worstn;
        std::printf("  b'=%..., recon=%g  oracle=%g  tau(n)tau(p)=%g\n", 0,
                    reconstruct(patched, n).real(), oracle.a[(size_t)n].real(),
                    (tau.coefficient(n) * tau.coefficient(p)).real());
        std::printf("  n=%lld factor: ", n);
        for (auto [q,e] : factorize(n)) std::printf("%lld^%d ", q, e);
        std::printf("\n  state2 coeffs: ");
        for (int m = 0; m <= 4; ++m) std::printf("%g ", states.at(2).coeffs[m].real());
        std::printf("\n  Tstate2: ");
        for (int m = 0; m <= 4; ++m) std::printf("%g ", t_applied.coeffs[m].real());
        std::printf("\n");
    }
    return 0;
}
