#include "qjt/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace qjt {

namespace {

int total(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool divides(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiPoly::Exponents lcm_exp(const MultiPoly::Exponents& a,
                             const MultiPoly::Exponents& b) {
    MultiPoly::Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly monomial(const std::vector<std::string>& vars,
                   const MultiPoly::Exponents& e, const mpq_class& c) {
    MultiPoly m(vars);
    m.add_term(e, c);
    return m;
}

}  // namespace

bool monomial_greater(const MultiPoly::Exponents& a,
                      const MultiPoly::Exponents& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    const int da = total(a), db = total(b);
    if (da != db) return da > db;
    // degrevlex: the last nonzero entry of a-b negative means a > b.
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::pair<MultiPoly::Exponents, mpq_class> leading_term(const MultiPoly& f,
                                                        MonomialOrder order) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (monomial_greater(it->first, best->first, order)) best = it;
    return {best->first, best->second};
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
    MultiPoly rem(f.vars());
    MultiPoly h = f;
    while (!h.is_zero()) {
        auto [le, lc] = leading_term(h, order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            auto [ge, gc] = leading_term(g, order);
            if (!divides(ge, le)) continue;
            MultiPoly::Exponents q(le.size());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = le[i] - ge[i];
            h = h - monomial(f.vars(), q, lc / gc) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t = monomial(f.vars(), le, lc);
            rem = rem + t;
            h = h - t;
        }
    }
    return rem;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                  MonomialOrder order,
                                  const BuchbergerBudget& budget) {
    std::vector<MultiPoly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(f);
    if (!g.empty())
        for (const auto& f : g)
            if (f.vars() != g[0].vars())
                throw std::invalid_argument("generators over different variables");
    if (g.empty()) return {};

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.push_back({i, j});

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > budget.max_pairs)
            throw BudgetExceededError(
                "buchberger pair budget exceeded (" +
                    std::to_string(budget.max_pairs) + ")",
                g);
        // Normal strategy: smallest lcm degree first.
        auto best = pairs.begin();
        auto lt_of = [&](std::size_t k) { return leading_term(g[k], order).first; };
        int best_deg = total(lcm_exp(lt_of(best->first), lt_of(best->second)));
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            int d = total(lcm_exp(lt_of(it->first), lt_of(it->second)));
            if (d < best_deg) { best = it; best_deg = d; }
        }
        auto [i, j] = *best;
        pairs.erase(best);

        auto [ei, ci] = leading_term(g[i], order);
        auto [ej, cj] = leading_term(g[j], order);
        if (coprime(ei, ej)) continue;  // product criterion
        const auto l = lcm_exp(ei, ej);
        MultiPoly::Exponents qi(l.size()), qj(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) {
            qi[k] = l[k] - ei[k];
            qj[k] = l[k] - ej[k];
        }
        MultiPoly s = monomial(g[i].vars(), qi, mpq_class(1) / ci) * g[i] -
                      monomial(g[j].vars(), qj, mpq_class(1) / cj) * g[j];
        MultiPoly r = normal_form(s, g, order);
        if (r.is_zero()) continue;
        for (std::size_t k = 0; k < g.size(); ++k) pairs.push_back({k, g.size()});
        g.push_back(r);
    }

    // Minimalize: drop members whose leading monomial is divisible by
    // another member's.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [ei, ci] = leading_term(g[i], order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            auto [ej, cj] = leading_term(g[j], order);
            if (divides(ej, ei) && (ej != ei || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Inter-reduce tails and make monic.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others, order);
        if (r.is_zero()) continue;
        auto [e, c] = leading_term(r, order);
        reduced.push_back(r.scaled(1 / c));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const MultiPoly& a, const MultiPoly& b) {
                  return monomial_greater(leading_term(b, order).first,
                                          leading_term(a, order).first, order);
              });
    return reduced;
}

bool is_unit_ideal_basis(const std::vector<MultiPoly>& reduced_basis) {
    return reduced_basis.size() == 1 && reduced_basis[0].is_constant() &&
           !reduced_basis[0].is_zero();
}

}  // namespace qjt
