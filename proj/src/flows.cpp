#include "qjt/flows.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qjt {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform nonzero coordinate: {1..10^6} over Q, {1..p-1} over F_p.
Scalar random_nonzero(std::uint64_t& state, const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rational) {
        long v = static_cast<long>(splitmix64(state) % 1000000ULL) + 1;
        return Scalar::rational(v, 1);
    }
    std::uint64_t v = splitmix64(state) % (f.prime - 1) + 1;
    return Scalar::prime_field(v, f.prime);
}

}  // namespace

Weight::Weight(const Quiver& q, std::vector<long> values) : sigma(std::move(values)) {
    if (sigma.size() != q.num_vertices())
        throw std::invalid_argument("weight length != vertex count");
    long sum = std::accumulate(sigma.begin(), sigma.end(), 0L);
    if (sum != 0)
        throw std::invalid_argument("weight does not sum to zero");
    if (std::all_of(sigma.begin(), sigma.end(), [](long v) { return v == 0; }))
        throw std::invalid_argument("weight is identically zero");
}

EvalPoint EvalPoint::make(std::vector<Scalar> coords) {
    if (coords.empty())
        throw std::invalid_argument("evaluation point needs >= 1 coordinate");
    for (const auto& c : coords)
        if (c.field() != coords[0].field())
            throw FieldMismatchError("mixed fields in evaluation point");
    return EvalPoint{std::move(coords)};
}

FlowBasis::FlowBasis(std::shared_ptr<const Quiver> quiver, Weight weight)
    : quiver_(std::move(quiver)), weight_(std::move(weight)) {
    const Quiver& q = *quiver_;
    for (long s : weight_.sigma) bound_ += std::max(s, 0L);

    // Walk vertices in topological order. All inflow into the current
    // vertex is already fixed, so the out-arrows must split
    // sigma + inflow; each arc carries at most the total positive
    // divergence (acyclicity: flow never revisits an arc).
    std::vector<long> flow(q.num_arrows(), 0);
    const auto& topo = q.topo_order();

    auto place = [&](auto&& self, std::size_t ti) -> void {
        if (ti == topo.size()) {
            points_.push_back(FlowPoint{flow});
            return;
        }
        std::size_t v = topo[ti];
        long need = weight_.sigma[v];
        for (std::size_t a : q.in_arrows(v)) need += flow[a];
        std::vector<std::size_t> outs = q.out_arrows(v);
        std::sort(outs.begin(), outs.end());
        if (need < 0) return;
        auto split = [&](auto&& inner, std::size_t k, long rem) -> void {
            if (k == outs.size()) {
                if (rem == 0) self(self, ti + 1);
                return;
            }
            long cap = std::min(rem, bound_);
            for (long val = 0; val <= cap; ++val) {
                flow[outs[k]] = val;
                inner(inner, k + 1, rem - val);
            }
            flow[outs[k]] = 0;
        };
        split(split, 0, need);
    };
    place(place, 0);

    std::sort(points_.begin(), points_.end());

    // Re-verify the divergence equations for every enumerated point.
    for (const auto& fp : points_)
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            long div = 0;
            for (std::size_t a : q.out_arrows(v)) div += fp.r[a];
            for (std::size_t a : q.in_arrows(v)) div -= fp.r[a];
            if (div != weight_.sigma[v])
                throw std::logic_error("flow enumeration produced a bad point");
        }

    if (points_.empty())
        throw EmptySemistableLocusError(
            "no lattice flows for this weight; the semistable locus is empty");
}

FlowBasis enumerate_flow_points(std::shared_ptr<const Quiver> q, Weight w) {
    return FlowBasis(std::move(q), std::move(w));
}

MultiPoly FlowBasis::monomial_poly(const FlowPoint& r) const {
    std::vector<std::string> vars;
    for (const auto& a : quiver_->arrows()) vars.push_back(a.id);
    MultiPoly m(vars);
    MultiPoly::Exponents e(vars.size());
    for (std::size_t a = 0; a < e.size(); ++a) e[a] = static_cast<int>(r.r[a]);
    m.add_term(e, 1);
    return m;
}

MultiPoly FlowBasis::phi_arrow_poly(std::size_t a) const {
    std::vector<std::string> vars;
    for (const auto& ar : quiver_->arrows()) vars.push_back(ar.id);
    MultiPoly p(vars);
    for (const auto& fp : points_) {
        if (fp.r[a] == 0) continue;
        MultiPoly::Exponents e(vars.size());
        for (std::size_t k = 0; k < e.size(); ++k)
            e[k] = static_cast<int>(fp.r[k]);
        p.add_term(e, mpq_class(fp.r[a]));
    }
    return p;
}

long FlowBasis::max_monomial_degree() const {
    long d = 0;
    for (const auto& fp : points_)
        d = std::max(d, std::accumulate(fp.r.begin(), fp.r.end(), 0L));
    return d;
}

namespace {

Scalar eval_monomial(const FlowPoint& r, const EvalPoint& p) {
    Scalar v = Scalar::one(p.field());
    for (std::size_t a = 0; a < r.r.size(); ++a) {
        if (r.r[a] == 0) continue;
        if (p.alpha[a].is_zero()) return Scalar::zero(p.field());
        v = v * p.alpha[a].pow(static_cast<unsigned long>(r.r[a]));
    }
    return v;
}

}  // namespace

bool is_semistable(const FlowBasis& fb, const EvalPoint& p) {
    if (p.alpha.size() != fb.quiver().num_arrows())
        throw std::invalid_argument("evaluation point arity mismatch");
    for (const auto& r : fb.points())
        if (!eval_monomial(r, p).is_zero()) return true;
    return false;
}

Scalar phi_arrow(const FlowBasis& fb, const EvalPoint& p, std::size_t a) {
    Scalar acc = Scalar::zero(p.field());
    for (const auto& r : fb.points()) {
        if (r.r[a] == 0) continue;
        acc = acc + Scalar::from_int(r.r[a], p.field()) * eval_monomial(r, p);
    }
    return acc;
}

std::vector<Scalar> phi_all_arrows(const FlowBasis& fb, const EvalPoint& p) {
    std::vector<Scalar> phi(fb.quiver().num_arrows(), Scalar::zero(p.field()));
    for (const auto& r : fb.points()) {
        Scalar y = eval_monomial(r, p);
        if (y.is_zero()) continue;
        for (std::size_t a = 0; a < phi.size(); ++a)
            if (r.r[a] != 0)
                phi[a] = phi[a] + Scalar::from_int(r.r[a], p.field()) * y;
    }
    return phi;
}

Scalar phi_path(const FlowBasis& fb, const EvalPoint& p,
                const std::vector<std::size_t>& path) {
    Scalar acc = Scalar::one(p.field());
    for (std::size_t a : path) acc = acc * phi_arrow(fb, p, a);
    return acc;
}

bool in_F_inj(const FlowBasis& fb, const EvalPoint& p) {
    const Quiver& q = fb.quiver();
    const std::vector<Scalar> phi = phi_all_arrows(fb, p);
    for (std::size_t l = 1; l < q.loewy_length(); ++l) {
        for (std::size_t y : q.gamma_in(l)) {
            bool found = false;
            for (std::size_t x = 0; x < q.num_vertices() && !found; ++x) {
                for (const auto& path : q.paths_between(x, y, l)) {
                    Scalar v = Scalar::one(p.field());
                    for (std::size_t a : path) v = v * phi[a];
                    if (!v.is_zero()) { found = true; break; }
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

std::vector<EvalPoint> sample_semistable(const FlowBasis& fb,
                                         SampleStrategy strategy,
                                         FieldSpec field, std::uint64_t seed,
                                         std::size_t count,
                                         std::size_t rejection_budget) {
    const std::size_t n = fb.quiver().num_arrows();
    std::uint64_t state = seed ^ 0x51c64b9febf2a3ULL;
    std::vector<EvalPoint> out;

    auto dense = [&]() {
        std::vector<Scalar> c;
        for (std::size_t a = 0; a < n; ++a) c.push_back(random_nonzero(state, field));
        return EvalPoint::make(std::move(c));
    };

    while (out.size() < count) {
        EvalPoint p{{}};
        switch (strategy) {
            case SampleStrategy::Dense:
                p = dense();
                break;
            case SampleStrategy::Support: {
                const auto& pts = fb.points();
                const FlowPoint& r = pts[splitmix64(state) % pts.size()];
                std::vector<Scalar> c;
                for (std::size_t a = 0; a < n; ++a)
                    c.push_back(r.r[a] > 0 ? random_nonzero(state, field)
                                           : Scalar::zero(field));
                p = EvalPoint::make(std::move(c));
                break;
            }
            case SampleStrategy::FInj: {
                bool ok = false;
                for (std::size_t tries = 0; tries < rejection_budget; ++tries) {
                    p = dense();
                    if (in_F_inj(fb, p)) { ok = true; break; }
                }
                if (!ok)
                    throw SamplingBudgetError(
                        "rejection budget exhausted: V_inj appears empty");
                break;
            }
        }
        if (!is_semistable(fb, p))
            throw std::logic_error("sampled point is not semistable");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace qjt
