// Bounds for the pendant-extended paths P'_n, n = 3..12.

#include "murlab/murlab.hpp"

#include <iostream>

int main() {
    for (int n = 3; n <= 12; ++n) {
        const auto r = murlab::compute_mur(murlab::gen::p_prime(n));
        std::cout << "P'" << n << " (" << n + 1 << " vertices): " << murlab::summary(r) << "\n";
    }
}
