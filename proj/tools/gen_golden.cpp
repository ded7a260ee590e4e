// Writes the oracle's golden table: d,N0,N1,K0,K1,G0,G1,OMEGA,M,K0_PRINTED,NODES,RCOUNT,LR,EQ8

#include <cstdlib>
#include <iostream>

#include "oracle/oracle.hpp"

int main(int argc, char** argv) {
    const int d_max = argc > 1 ? std::atoi(argv[1]) : 12;
    std::cout << "d,N0,N1,K0,K1,G0,G1,OMEGA,M,K0_PRINTED,NODES,RCOUNT,LR,EQ8\n";
    const auto rows = oracle::evaluate(d_max);
    for (int d = 1; d <= d_max; ++d) {
        const auto& v = rows[d - 1];
        std::cout << d;
        for (const auto* x : {&v.n0, &v.n1, &v.k0, &v.k1, &v.g0, &v.g1, &v.omega, &v.m, &v.k0_printed, &v.nodes,
                              &v.rcount, &v.lr, &v.eq8}) {
            std::cout << ',' << oracle::str(*x);
        }
        std::cout << '\n';
    }
}
