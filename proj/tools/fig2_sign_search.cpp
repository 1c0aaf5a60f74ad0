// Prints the fig2 level-1 sign search and the chosen incidence lines.

#include <iostream>

#include "fig2_sign_search.hpp"

int main() {
    using namespace hyperlap;
    const auto result = tools::search_fig2_signs();
    std::cout << "assignments meeting the three sign facts: " << result.satisfying.size() << '\n';
    for (const auto& c : result.satisfying)
        std::cout << "  mask=" << c.mask << " upper_k1_plus_one=" << c.upper_k1_is_plus_one
                  << " boundary_squared_zero=" << c.boundary_squared_zero << '\n';
    if (result.satisfying.empty()) {
        std::cout << "no assignment found\n";
        return 1;
    }
    std::cout << "chosen mask=" << result.chosen.mask << '\n';
    for (const auto& inc : result.complex.levels[1])
        std::cout << "inc 1 " << inc.lower << ' ' << inc.upper << ' '
                  << (inc.sign > 0 ? "+1" : "-1") << '\n';
    return 0;
}
