#include "flagein/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagein {

TripleKey sorted_key(int i, int j, int k)
{
    TripleKey key{i, j, k};
    std::sort(key.begin(), key.end());
    return key;
}

std::string format_key(const TripleKey& k)
{
    return "[" + std::to_string(k[0] + 1) + std::to_string(k[1] + 1) + std::to_string(k[2] + 1) + "]";
}

Rational TripleTable::get(int i, int j, int k) const
{
    auto it = entries_.find(sorted_key(i, j, k));
    return it == entries_.end() ? Rational(0) : it->second;
}

void TripleTable::set(int i, int j, int k, const Rational& v)
{
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
        throw std::out_of_range("triple index out of range");
    if (v < 0) throw std::invalid_argument("triples are nonnegative");
    if (v == 0) entries_.erase(sorted_key(i, j, k));
    else entries_[sorted_key(i, j, k)] = v;
}

std::vector<TripleKey> TripleTable::support() const
{
    std::vector<TripleKey> out;
    for (const auto& [k, v] : entries_)
        if (v != 0) out.push_back(k);
    return out;
}

bool operator==(const TripleTable& a, const TripleTable& b)
{
    return a.n_ == b.n_ && a.entries_ == b.entries_;
}

std::vector<TripleKey> bracket_support(const Decomposition& dec)
{
    const int n = dec.size();
    std::vector<TripleKey> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                bool hit = false;
                for (int sj : {1, -1})
                    for (int sk : {1, -1}) {
                        bool zero = true;
                        for (std::size_t c = 0; c < dec.summands[i].troot.size(); ++c)
                            zero = zero && dec.summands[i].troot[c] + sj * dec.summands[j].troot[c] +
                                                   sk * dec.summands[k].troot[c] == 0;
                        hit = hit || zero;
                    }
                if (hit) out.push_back({i, j, k});
            }
    return out;
}

}  // namespace flagein
