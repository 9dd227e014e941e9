/*
   Copyright 2026 The kkpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Prints the strata of (0;2,2,3,p) for a few primes, with the theta_k each one contains,
// and the genus of the quotient by <a,b> for theta_1.

#include <cstdlib>
#include <iostream>

#include "kkp/kkp.hpp"

int main(int argc, char** argv) {
    std::vector<int> primes{5, 7};
    if (argc > 1) primes.assign(1, std::atoi(argv[1]));
    for (int p : primes) {
        const auto& g = kkp::Group::get(kkp::GroupSpec::semidirect(p));
        auto cl = kkp::classify_actions(g, kkp::Signature(0, {2, 2, 3, p}));
        kkp::label_theta_strata(cl);
        std::cout << "p = " << p << ": " << cl.strata.size() << " strata over " << cl.total() << " vectors\n";
        for (const auto& s : cl.strata) {
            std::cout << "  " << kkp::to_string(s.representative) << "  [";
            for (std::size_t i = 0; i < s.labels.size(); ++i) std::cout << (i ? " " : "") << s.labels[i];
            std::cout << "]\n";
        }
        const auto v = kkp::theta_k(g, 1);
        const auto h = kkp::subgroup_generated(g, {g.eval("a"), g.eval("b")});
        const auto q = kkp::induced_signature(v, h);
        std::cout << "  theta_1 / <a,b> has signature " << kkp::to_string(q.signature()) << "\n";
    }
    return 0;
}
