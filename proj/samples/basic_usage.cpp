// Prints the first few k-Mersenne octonions for k = 2, their squared norms
// and one Catalan check.

#include <kmo/kmo.hpp>

#include <iostream>

int main()
{
    const kmo::OctSeqParams mo{kmo::OctKind::MO, 2};
    for (std::uint64_t n = 0; n < 4; ++n) {
        const auto s = kmo::oct_seq(mo, n);
        std::cout << "MO_{2," << n << "} = " << s << "  N^2 = " << kmo::norm_sq(s) << '\n';
    }

    const auto alpha = kmo::alpha_beta(2).alpha;
    std::cout << "alpha_3 = " << alpha[3] << '\n';

    const auto check = kmo::check_catalan(kmo::OctKind::MO, 2, 5, 2, kmo::Ordering::LR);
    std::cout << "catalan_lr MO k=2 n=5 r=2: " << kmo::to_string(check.status) << '\n';
}
