#include "support/oracle.hpp"

#include <algorithm>

namespace oracle {

using sset::SimplexExpr;
using sset::SimplicialSet;

namespace {

std::vector<int> surjection_vector(const sset::OrdinalSurjection& s) {
    std::vector<int> v(static_cast<std::size_t>(s.source_dim) + 1);
    for (int i = 0; i <= s.source_dim; ++i) v[static_cast<std::size_t>(i)] = s(i);
    return v;
}

OSimplex normalize(const SimplicialSet& X, OSimplex s) {
    for (;;) {
        const int m = X.simplex(s.base).dim;
        // Smallest value of [m] not attained (eta is monotone).
        int missing = -1;
        {
            int want = 0;
            std::size_t pos = 0;
            while (want <= m) {
                if (pos < s.eta.size() && s.eta[pos] == want) {
                    while (pos < s.eta.size() && s.eta[pos] == want) ++pos;
                    ++want;
                } else {
                    missing = want;
                    break;
                }
            }
        }
        if (missing < 0) return s;
        const SimplexExpr& f = X.simplex(s.base).faces[static_cast<std::size_t>(missing)];
        std::vector<int> theta = surjection_vector(f.surj);
        for (auto& v : s.eta) {
            if (v > missing) --v;
            v = theta[static_cast<std::size_t>(v)];
        }
        s.base = f.base;
    }
}

}  // namespace

OSimplex from_expr(const SimplicialSet& X, const SimplexExpr& e) {
    (void)X;
    return OSimplex{e.base, surjection_vector(e.surj)};
}

OSimplex face(const SimplicialSet& X, OSimplex s, int i) {
    s.eta.erase(s.eta.begin() + i);
    return normalize(X, std::move(s));
}

OSimplex degeneracy(const OSimplex& s, int i) {
    OSimplex out = s;
    out.eta.insert(out.eta.begin() + i, s.eta[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<OSimplex> tabulate(const SimplicialSet& X, int n) {
    std::vector<OSimplex> out;
    for (int b = 0; b < X.size(); ++b) {
        const int m = X.simplex(b).dim;
        if (m > n) break;
        // All monotone surjections [n] ->> [m]: start at 0, unit steps, end at m.
        std::vector<int> v(static_cast<std::size_t>(n) + 1);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n + 1) {
                if (v[static_cast<std::size_t>(n)] == m) out.push_back(OSimplex{b, v});
                return;
            }
            int lo = (pos == 0) ? 0 : v[static_cast<std::size_t>(pos - 1)];
            int hi = (pos == 0) ? 0 : std::min(m, lo + 1);
            for (int next = lo; next <= hi; ++next) {
                v[static_cast<std::size_t>(pos)] = next;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

long long chain_count(int p, int q, int d) {
    struct Pt {
        int a, b;
    };
    std::vector<Pt> pts;
    for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= q; ++b) pts.push_back(Pt{a, b});
    long long total = 0;
    auto rec = [&](auto&& self, std::size_t last, int remaining) -> void {
        if (remaining == 0) {
            ++total;
            return;
        }
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (pts[j].a >= pts[last].a && pts[j].b >= pts[last].b &&
                (pts[j].a > pts[last].a || pts[j].b > pts[last].b))
                self(self, j, remaining - 1);
        }
    };
    for (std::size_t i = 0; i < pts.size(); ++i) rec(rec, i, d);
    return total;
}

long long product_count(const SimplicialSet& X, const SimplicialSet& Y, int n) {
    std::vector<OSimplex> xs = tabulate(X, n);
    std::vector<OSimplex> ys = tabulate(Y, n);
    long long count = 0;
    for (const auto& u : xs) {
        for (const auto& v : ys) {
            bool degenerate = false;
            for (int i = 0; i < n && !degenerate; ++i)
                degenerate = u.eta[static_cast<std::size_t>(i)] ==
                                 u.eta[static_cast<std::size_t>(i + 1)] &&
                             v.eta[static_cast<std::size_t>(i)] ==
                                 v.eta[static_cast<std::size_t>(i + 1)];
            if (!degenerate) ++count;
        }
    }
    return count;
}

}  // namespace oracle
