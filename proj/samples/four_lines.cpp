// How many lines meet four general lines in P^3? Lines in P^3 form Gr(2,4); meeting a
// line is the class X^(1) = c1, so the answer is the degree of c1^4.
#include <iostream>

#include "schubert/schubert.hpp"

int main() {
    using namespace schubert;
    const GrassmannianRing gr(2, 4);
    const SchurExpansion sigma4 = gr.reduce(power(c(1), 4));
    std::cout << "sigma_1^4 = " << sigma4.to_string() << "\n";
    std::cout << "lines meeting four general lines: " << gr.integrate(sigma4) << "\n";
}
