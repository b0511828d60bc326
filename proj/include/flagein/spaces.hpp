#pragma once

#include "flagein/einstein.hpp"

#include <string>
#include <vector>

namespace flagein {

// A space named on the command line.  Alias grammar:
//   F4-I  E7-I  E8(i)-I  E8(ii)-I  E8:node=3-I
//   E6-IIa  E7-IIa  B:l=5-IIa  D:l=4-IIa
//   C:l=6,p=2-IIb  D:l=8,p=3-IIb
//   E6:nodes=1,4   B5:nodes=1,2   (explicit painted nodes, no type check)
// A trailing type is checked against the decomposition.
struct SpaceSpec {
    LieFamily family;
    std::vector<int> painted;  // 1-based
    std::string alias;         // canonical form
    std::string label;         // e.g. "E8/SU(7)xSU(2)xU(1)"-style description
    bool degenerate = false;   // SO(6) end of the SO(2l) {a1,a2} series
};

SpaceSpec parse_space(const std::string& alias);

// Model for a spec; the degenerate SO(6) case comes from the series formulas.
SpaceModel build_model(const SpaceSpec& s);

// SO(6) instance of the SO(2l)/U(1)xU(1)xSO(2l-4) formulas.
SpaceModel so6_series_model();

// The in-scope four-summand spaces with small parameters, in a fixed order.
std::vector<SpaceSpec> standard_spaces();

// "K = A2xA1 x T1" style description of the isotropy group.
std::string describe(const LieFamily& f, const std::vector<int>& painted);

}  // namespace flagein
