// Writes the bundled synthetic TSI: a correlated Gaussian whose x, diagonal
// and antidiagonal projections are 18.2, 24.6 and 1.9 nm wide at 1584 nm.

#include "bwkt/io.hpp"
#include "bwkt/tsi.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_synthetic_tsi <out.csv>\n";
        return 2;
    }
    const auto exact = bwkt::correlated_gaussian_tsi(18.2e-9, 24.6e-9, 1.9e-9, 1584e-9, 0.5e-9, 160, 1e4);
    std::vector<double> counts(exact.counts().begin(), exact.counts().end());
    for (double& c : counts)
        c = std::round(c);
    const bwkt::TsiGrid tsi(exact.lambda_s(), exact.lambda_i(), std::move(counts));
    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << argv[1] << '\n';
        return 2;
    }
    bwkt::write_tsi(out, tsi);
    return 0;
}
