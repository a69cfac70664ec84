#include <cstdio>
#include "parton/parton_state.hpp"
using namespace parton;
int main() {
    long long p = 2; int k = 12;
    auto G = [&](int i, int j) {
        std::vector<cplx> ei(8, 0.0), ej(8, 0.0);
        ei[i] = 1.0; ej[j] = 1.0;
        return inner_product(kozyrev_combination(p, ei), kozyrev_combination(p, ej),
                             Measure::additive, k - 1.0).real();
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j <= 2; ++j)
            std::printf("i=%d j=%d  G(i-1,j)=%.6e  p^{k-1}G(i,j+1)=%.6e  ratio=%.12f\n", i, j,
                        G(i - 1, j), dpow(p, k - 1) * G(i, j + 1),
                        G(i - 1, j) / (dpow(p, k - 1) * G(i, j + 1)));
    // also raw entries
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) std::printf("%12.5e ", G(i, j));
        std::printf("\n");
    }
    return 0;
}
