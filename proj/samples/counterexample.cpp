// The key diagram of (0,3,3): multiplicity-free polynomial, non-shellable poset.

#include <iostream>

#include "kohnert/kohnert.hpp"

int main() {
    using namespace kohnert;
    const WeakComposition a{0, 3, 3};
    const KohnertPoset kp = build_poset(key_diagram(a));
    const KohnertPolynomial p = kohnert_polynomial(key_diagram(a));

    std::cout << "elements: " << kp.size() << "\n";
    std::cout << "polynomial: " << to_text(p) << "\n";
    std::cout << "multiplicity free: " << (is_multiplicity_free(p) ? "yes" : "no") << "\n";
    std::cout << "pure: " << (is_pure(a) ? "yes" : "no") << "\n";

    if (auto w = two_chain_witness(kp.order)) {
        std::cout << "interval with two disjoint chains, from\n"
                  << render_grid(kp[w->bottom]) << "to\n"
                  << render_grid(kp[w->top]);
    }
    for (const PatternHit& h : keynecrank_patterns(a))
        std::cout << "pattern " << to_string(h.kind()) << " at " << to_json(h)["indices"].dump() << "\n";
}
