#pragma once

#include "flagein/flagdecomp.hpp"
#include "flagein/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace flagein {

using TripleKey = std::array<int, 3>;  // sorted, 0-based summand indices

TripleKey sorted_key(int i, int j, int k);
std::string format_key(const TripleKey& k);  // "[123]"

// Symmetric table of the constants [ijk]; absent entries are zero.
class TripleTable {
public:
    TripleTable() = default;
    explicit TripleTable(int n) : n_(n) {}

    int size() const { return n_; }
    Rational get(int i, int j, int k) const;
    void set(int i, int j, int k, const Rational& v);
    const std::map<TripleKey, Rational>& entries() const { return entries_; }
    // Keys with a nonzero value.
    std::vector<TripleKey> support() const;

    friend bool operator==(const TripleTable& a, const TripleTable& b);

private:
    int n_ = 0;
    std::map<TripleKey, Rational> entries_;
};

// Unordered triples {i,j,k} with +-xi_i +- xi_j +- xi_k = 0 for some signs.
std::vector<TripleKey> bracket_support(const Decomposition& dec);

}  // namespace flagein
