#include "flagein/poly.hpp"

#include <functional>
#include <stdexcept>

namespace flagein {

Polynomial::Polynomial(RationalVector c) : c_(std::move(c)) { trim(); }

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const
{
    RationalVector d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(d);
}

Polynomial Polynomial::operator-() const
{
    RationalVector d = c_;
    for (auto& v : d) v = -v;
    return Polynomial(d);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    RationalVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(c);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.zero() || b.zero()) return {};
    RationalVector c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(c);
}

Polynomial Polynomial::mod(const Polynomial& d) const
{
    if (d.zero()) throw std::domain_error("polynomial division by zero");
    RationalVector r = c_;
    const int dd = d.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        if (r[k] == 0) continue;
        Rational f = r[k] / d.lead();
        for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.c_[i];
    }
    return Polynomial(r);
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p)
{
    std::vector<Polynomial> seq = {p, p.derivative()};
    while (!seq.back().zero()) {
        Polynomial r = -seq[seq.size() - 2].mod(seq.back());
        if (r.zero()) break;
        seq.push_back(r);
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q(x));
        if (s == 0) continue;
        if (last && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b)
{
    return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                                         const Rational& width)
{
    auto seq = sturm_sequence(p);
    std::vector<std::pair<Rational, Rational>> out;
    std::function<void(const Rational&, const Rational&)> rec = [&](const Rational& lo, const Rational& hi) {
        int n = sturm_count(seq, lo, hi);
        if (n == 0) return;
        if (n == 1) {
            // counting rather than sign tests, so even multiplicities are handled too
            Rational l = lo, h = hi;
            while (h - l > width) {
                Rational m = (l + h) / 2;
                if (p(m) == 0) {
                    out.emplace_back(m, m);
                    return;
                }
                if (sturm_count(seq, l, m) == 1) h = m;
                else l = m;
            }
            out.emplace_back(l, h);
            return;
        }
        Rational m = (lo + hi) / 2;
        if (p(m) == 0) {
            rec(lo, m - (m - lo) / 1024);
            out.emplace_back(m, m);
            rec(m + (hi - m) / 1024, hi);
            return;
        }
        rec(lo, m);
        rec(m, hi);
    };
    if (p(a) == 0 || p(b) == 0) throw std::invalid_argument("isolate_roots: endpoint is a root");
    rec(a, b);
    return out;
}

}  // namespace flagein
