#pragma once

#include "flagein/rootsys.hpp"

#include <memory>
#include <string>
#include <vector>

namespace flagein {

// Painted nodes are 1-based labels, kept sorted.
struct PaintedDiagram {
    std::shared_ptr<const RootSystem> root_system;
    std::vector<int> painted;

    PaintedDiagram(std::shared_ptr<const RootSystem> rs, std::vector<int> nodes);
    std::vector<int> white() const;
    bool is_painted(int node) const;
};

// Coefficients over the painted simple roots, in painted order.
using TRoot = std::vector<int>;

struct IsotropySummand {
    TRoot troot;
    std::vector<Root> members;  // positive complementary roots restricting to troot
    int dim = 0;                // real dimension
    Root lowest_weight;
    Root highest_weight;
};

enum class SpaceType { TypeI, TypeIIa, TypeIIb, Other };
std::string to_string(SpaceType t);

struct Decomposition {
    PaintedDiagram diagram;
    std::vector<Root> r_k_plus;
    std::vector<Root> r_m_plus;
    std::vector<IsotropySummand> summands;
    SpaceType type = SpaceType::Other;

    const RootSystem& root_system() const { return *diagram.root_system; }
    int size() const { return static_cast<int>(summands.size()); }
    std::vector<int> dims() const;
    // Position of t-root xi (or -xi, reported through sign) among the summands, or -1.
    int summand_of(const TRoot& xi, int* sign = nullptr) const;
    TRoot restrict(const Root& a) const;
};

// Four-summand spaces get the canonical order
//   Type I    (a, 2a, 3a, 4a)
//   Type II   (a_first, a_second, a_first + a_second, remaining t-root)
// where first/second refer to the painted nodes in increasing label order.
// Anything else is ordered by height, then lexicographically.
Decomposition decompose(const PaintedDiagram& pd);

// K-simple root of summand k within the sign-flipped member set; throws if not unique.
Root lowest_weight(const Decomposition& dec, int k, int sign = +1);

// Complex dimension of summand k via the Weyl dimension formula for K.
long weyl_dim(const Decomposition& dec, int k);

struct InvariantOrdering {
    int id = 0;
    std::vector<int> signs;  // +1 / -1 per summand
    int negation = 0;        // id of the opposite cell
    bool natural = false;
};

// All open sign cells of the t-root hyperplane arrangement.  Ids 0..n-1 are one cell
// from each negation pair (0 is the natural cell, the rest follow clockwise from it in
// the (a_first, a_second) plane); id n+i is the negation of id i.
std::vector<InvariantOrdering> enumerate_invariant_orderings(const Decomposition& dec);

struct ClassifiedSpace {
    LieFamily family;
    std::vector<int> painted;
    SpaceType type;
    std::vector<int> dims;
    std::string white_type;  // e.g. "A1xA3"
    bool degenerate = false;
    std::string note;
};

struct Classification {
    std::vector<ClassifiedSpace> spaces;
    std::vector<ClassifiedSpace> degenerate;
    // Two painted nodes of heights 1 and 2 that nevertheless give five t-roots.
    std::vector<ClassifiedSpace> rejected;
};

Classification classify_four_summands(int max_classical_rank);

// Connected components of a node subset, typed by Dynkin label and joined with 'x'.
std::string subdiagram_type(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace flagein
