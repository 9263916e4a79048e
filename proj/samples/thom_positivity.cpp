// Schur expansions of the classical Thom polynomials, and a polynomial that fails.
#include <iostream>

#include "schubert/schubert.hpp"

int main() {
    using namespace schubert;
    for (const auto& r : verify_thom_table())
        std::cout << r.name << "  " << to_string(r.verdict) << "  " << r.expansion.to_string() << "\n";

    const auto bad = certify(parse_polynomial("c2 - c1^2"));
    std::cout << "c2 - c1^2  " << to_string(bad.verdict) << "  " << bad.expansion.to_string() << "\n";
}
