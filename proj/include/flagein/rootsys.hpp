#pragma once

#include "flagein/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flagein {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

struct LieFamily {
    Family family;
    int rank;

    // Validates the rank; exceptional families take their fixed rank when rank <= 0.
    LieFamily(Family f, int r = 0);

    bool exceptional() const;
    std::string name() const;  // "B5", "E6", ...

    friend bool operator==(const LieFamily&, const LieFamily&) = default;
};

// Coefficients over the simple roots.
using Root = std::vector<int>;
// Coefficients over the fundamental weights.
using Weight = RationalVector;

// Node numbering follows the diagrams used throughout this library:
//   B_l, C_l : chain 1..l, node l short (B) or long (C)
//   D_l      : chain 1..l-2, nodes l-1 and l both hang off l-2
//   E6       : chain 1..5, node 6 hangs off 3
//   E7       : chain 1..6, node 7 hangs off 4
//   E8       : chain 1..7, node 8 hangs off 5
//   F4       : 1-2=>3-4, nodes 1,2 long
//   G2       : node 1 short
class RootSystem {
public:
    explicit RootSystem(LieFamily f);

    const LieFamily& family() const { return family_; }
    int rank() const { return family_.rank; }

    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    // (alpha_i, alpha_j), long roots of squared length 2.
    const RationalMatrix& gram() const { return gram_; }
    // Killing form = killing_scale * gram.
    const Rational& killing_scale() const { return killing_scale_; }
    int dual_coxeter() const { return dual_coxeter_; }

    // Positive roots sorted by height then lexicographically, followed by their negatives.
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& highest_root() const { return highest_; }
    Root simple_root(int i) const;  // i is 0-based

    bool is_root(const Root& r) const { return index_.count(r) != 0; }
    // Index into roots(), or -1.
    int index_of(const Root& r) const;

    Rational inner_product(const Root& u, const Root& v) const;
    Rational inner_product(const RationalVector& u, const RationalVector& v) const;
    Rational inner_product_weight(const Weight& w, const RationalVector& root_coords) const;
    Rational inner_product_weights(const Weight& a, const Weight& b) const;

    // alpha_i = sum_j A_ij Lambda_j
    Weight to_weight(const RationalVector& root_coords) const;
    RationalVector to_root_coords(const Weight& w) const;

    // (p, q) for the a-string through b: b + n a in R for -p <= n <= q.
    std::pair<int, int> root_string(const Root& a, const Root& b) const;

    // Position (1-based) of node i (1-based) in Bourbaki numbering.
    int bourbaki_label(int node) const;

    // Plain-text dump: family, rank, one root per line.
    std::string serialize() const;

private:
    LieFamily family_;
    int dual_coxeter_ = 0;
    std::vector<std::vector<int>> cartan_;
    RationalMatrix gram_;
    RationalMatrix cartan_inv_;
    Rational killing_scale_;
    std::vector<Root> roots_, positive_;
    Root highest_;
    std::map<Root, int> index_;
    std::vector<int> bourbaki_;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
int height(const Root& r);
std::string format_root(const Root& r);  // "a1+2a2+a4"

}  // namespace flagein
