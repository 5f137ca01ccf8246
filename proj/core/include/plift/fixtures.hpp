#pragma once

#include <string>
#include <vector>

#include "plift/io.hpp"

namespace plift {

// Built-in instances shipped with the tool:
//   dual_numbers_p1  loop with gamma^2 = 0 over k[eps]/(eps^2), p = 3: the
//                    simple S1, the projective P1 (gamma -> eps), the rank-2
//                    cycle module and lifts of each.
//   a3_vex           A_3 over k[eps]/(eps^2), p = 2: V_ex = I[1,2] + I[2,3]
//                    with trivial and perturbed lifts.
//   a3_vex_cubic     the same over k[e]/(e^3).
//   a5_field         A_5 over R = k, p = 3, one module with bars [1,5], [2,3], [4,4].
//   xy_a2            A_2 over k[x,y]/(x^2,xy,y^2), p = 3.
std::vector<std::string> fixture_names();

// Throws Error(InvalidArgument) for an unknown name.
Instance fixture(const std::string& name);

}  // namespace plift
