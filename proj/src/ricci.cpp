#include "flagein/ricci.hpp"

#include <map>

namespace flagein {

RicciSystem::RicciSystem(const std::vector<int>& d, const TripleTable& t) : n_(static_cast<int>(d.size()))
{
    if (t.size() != n_) throw std::invalid_argument("ricci: size mismatch");
    terms_.resize(n_);
    for (int k = 0; k < n_; ++k) {
        std::map<std::vector<int>, Rational> acc;
        std::vector<int> e(n_, 0);
        e[k] = -1;
        acc[e] += make_rational(1, 2);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Rational c = t.get(i, j, k);
                if (c == 0) continue;
                std::vector<int> a(n_, 0), b(n_, 0);
                a[k] += 1, a[i] -= 1, a[j] -= 1;
                b[j] += 1, b[k] -= 1, b[i] -= 1;
                acc[a] += c / (4 * d[k]);
                acc[b] -= c / (2 * d[k]);
            }
        for (const auto& [exps, c] : acc)
            if (c != 0) terms_[k].push_back({c.get_d(), from_rational<HighPrecision>(c), exps});
    }
}

}  // namespace flagein
