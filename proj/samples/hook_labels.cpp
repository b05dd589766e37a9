// Prints the cover labels of a hook poset and checks they form an EL-labeling.

#include <iostream>

#include "kohnert/kohnert.hpp"

int main(int argc, char** argv) {
    using namespace kohnert;
    HookSpec h(3, 4, {1, 2, 4});
    if (argc == 4) h = HookSpec(std::stoi(argv[1]), std::stoi(argv[2]), parse_int_list(argv[3]));

    const KohnertPoset kp = build_poset(hook_generator(h));
    const EdgeLabeling lab = el_labeling_hook(kp);
    std::cout << to_string(h) << ": " << kp.size() << " elements, " << lab.size() << " covers\n\n";
    for (const auto& [e, l] : lab.labels())
        std::cout << to_string(kp[e.upper]) << " -> " << to_string(kp[e.lower]) << "  label " << l << "\n";

    const ElVerdict v = verify_el(kp.order, lab);
    std::cout << "\nEL-labeling: " << (v.ok ? "yes" : "no, " + v.reason) << "\n";
    return v.ok ? 0 : 1;
}
