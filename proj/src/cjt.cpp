#include "qjt/cjt.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qjt {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Locus Locus::full_semistable() {
    Locus l;
    l.kind = Kind::FullSemistable;
    l.label = "v";
    return l;
}

Locus Locus::vinj() {
    Locus l;
    l.kind = Kind::VInj;
    l.label = "vinj";
    return l;
}

Locus Locus::custom(
    std::string label,
    std::function<bool(const FlowBasis&, const EvalPoint&)> member,
    std::function<std::vector<EvalPoint>(const FlowBasis&, FieldSpec,
                                         std::uint64_t, std::size_t)> sampler) {
    Locus l;
    l.kind = Kind::Custom;
    l.label = std::move(label);
    l.member_fn = std::move(member);
    l.sampler_fn = std::move(sampler);
    return l;
}

bool Locus::contains(const FlowBasis& fb, const EvalPoint& p) const {
    switch (kind) {
        case Kind::FullSemistable:
            return is_semistable(fb, p);
        case Kind::VInj:
            // V_inj = V intersect F_inj, always the conjunction.
            return is_semistable(fb, p) && in_F_inj(fb, p);
        case Kind::Custom:
            return member_fn(fb, p);
    }
    return false;
}

std::vector<EvalPoint> Locus::sample(const FlowBasis& fb, FieldSpec field,
                                     std::uint64_t seed,
                                     std::size_t count) const {
    std::vector<EvalPoint> pts;
    switch (kind) {
        case Kind::FullSemistable:
            pts = sample_semistable(fb, SampleStrategy::Dense, field, seed, count);
            break;
        case Kind::VInj:
            pts = sample_semistable(fb, SampleStrategy::FInj, field, seed, count);
            break;
        case Kind::Custom:
            pts = sampler_fn(fb, field, seed, count);
            break;
    }
    for (const auto& p : pts)
        if (!contains(fb, p))
            throw std::logic_error("locus sampler emitted a non-member point");
    return pts;
}

namespace {

/*
 * Witness search over rational candidate points. Candidates come from
 * coordinate strata, phi / minor hypersurfaces, and dense samples; every
 * hit is verified exactly over Q before it counts.
 */
struct WitnessSearch {
    const Representation& m;
    const FlowBasis& fb;
    const Locus& locus;
    const RankProfile& generic;
    bool stop_at_first;
    std::vector<EvalPoint> points;
    std::vector<RankProfile> profiles;

    bool found() const { return !points.empty(); }

    bool consider(std::vector<Scalar> coords) {
        EvalPoint p = EvalPoint::make(std::move(coords));
        if (!locus.contains(fb, p)) return false;
        RankProfile prof = rank_profile(build_operator(m, fb, p));
        bool below = false;
        for (std::size_t i = 0; i < prof.r.size(); ++i)
            if (prof.r[i] < generic.r[i]) { below = true; break; }
        if (!below) return false;
        points.push_back(std::move(p));
        profiles.push_back(std::move(prof));
        return true;
    }
};

Scalar small_rational(std::uint64_t& state, std::size_t attempt) {
    if (attempt == 0) return Scalar::rational(1, 1);
    return Scalar::rational(static_cast<long>(splitmix64(state) % 9) + 1, 1);
}

// Zero-pattern strata: subsets of coordinates forced to zero whose
// complement still contains the support of some flow point.
void search_zero_strata(WitnessSearch& ws, const CjtBudget& budget,
                        std::uint64_t& state) {
    const std::size_t n = ws.fb.quiver().num_arrows();
    std::vector<std::uint64_t> supports;
    for (const auto& fp : ws.fb.points()) {
        std::uint64_t s = 0;
        for (std::size_t a = 0; a < n; ++a)
            if (fp.r[a] > 0) s |= 1ULL << a;
        supports.push_back(s);
    }
    std::vector<std::uint64_t> strata;
    if (n <= 12) {
        for (std::uint64_t z = 1; z < (1ULL << n); ++z) {
            bool ok = false;
            for (std::uint64_t s : supports)
                if ((s & z) == 0) { ok = true; break; }
            if (ok) strata.push_back(z);
        }
        // Smallest strata first, lexicographic within a size.
        std::stable_sort(strata.begin(), strata.end(),
                         [](std::uint64_t a, std::uint64_t b) {
                             int pa = __builtin_popcountll(a);
                             int pb = __builtin_popcountll(b);
                             return pa != pb ? pa < pb : a < b;
                         });
    } else {
        // Too many subsets; fall back to single-coordinate strata.
        for (std::size_t a = 0; a < n; ++a) {
            std::uint64_t z = 1ULL << a;
            for (std::uint64_t s : supports)
                if ((s & z) == 0) { strata.push_back(z); break; }
        }
    }
    if (strata.empty()) return;
    const std::size_t per =
        std::max<std::size_t>(1, budget.per_stratum / strata.size());
    for (std::uint64_t z : strata) {
        for (std::size_t attempt = 0; attempt < per; ++attempt) {
            std::vector<Scalar> coords;
            for (std::size_t a = 0; a < n; ++a)
                coords.push_back((z >> a) & 1 ? Scalar::rational(0, 1)
                                              : small_rational(state, attempt));
            if (ws.consider(std::move(coords)) && ws.stop_at_first) return;
        }
    }
}

// Splits f = A*v + B when v appears with degree exactly one.
bool split_linear(const MultiPoly& f, std::size_t var, MultiPoly& a,
                  MultiPoly& b) {
    if (f.degree_in(var) != 1) return false;
    a = MultiPoly(f.vars());
    b = MultiPoly(f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 1) {
            auto e2 = e;
            e2[var] = 0;
            a.add_term(e2, c);
        } else {
            b.add_term(e, c);
        }
    }
    return true;
}

// Points on a hypersurface f = 0, found by assigning all variables but a
// linear one and back-substituting.
void search_hypersurface(WitnessSearch& ws, const MultiPoly& f,
                         std::size_t attempts, std::uint64_t& state) {
    const std::size_t n = ws.fb.quiver().num_arrows();
    if (f.is_zero() || f.is_constant()) return;
    for (std::size_t var = 0; var < n; ++var) {
        MultiPoly a, b;
        if (!split_linear(f, var, a, b)) continue;
        for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
            std::map<std::string, Scalar> assign;
            std::vector<Scalar> coords(n, Scalar::rational(0, 1));
            for (std::size_t k = 0; k < n; ++k) {
                if (k == var) continue;
                coords[k] = small_rational(state, attempt);
                assign[ws.fb.quiver().arrows()[k].id] = coords[k];
            }
            assign[ws.fb.quiver().arrows()[var].id] = Scalar::rational(0, 1);
            Scalar av = a.eval(assign);
            if (av.is_zero()) continue;
            Scalar bv = b.eval(assign);
            coords[var] = -(bv / av);
            if (ws.consider(std::move(coords)) && ws.stop_at_first) return;
        }
        break;  // one linear variable per polynomial is enough
    }
}

struct PolyMatrix {
    std::vector<std::vector<MultiPoly>> e;

    std::size_t rows() const { return e.size(); }
    std::size_t cols() const { return e.empty() ? 0 : e[0].size(); }
};

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b,
                           std::size_t term_cap) {
    PolyMatrix r;
    r.e.assign(a.rows(), std::vector<MultiPoly>(b.cols(), MultiPoly(a.e[0][0].vars())));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.e[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.e[k][j].is_zero()) continue;
                r.e[i][j] = r.e[i][j] + a.e[i][k] * b.e[k][j];
                if (r.e[i][j].terms().size() > term_cap)
                    throw BudgetExceededError("symbolic matrix power too large", {});
            }
        }
    return r;
}

// Fraction-free elimination over Q[Y]; rank over the function field.
std::size_t poly_matrix_rank(PolyMatrix m, std::size_t term_cap) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    MultiPoly prev = MultiPoly::constant(m.e[0][0].vars(), 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m.e[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m.e[pr], m.e[r]);
        const MultiPoly piv = m.e[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const MultiPoly fac = m.e[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                MultiPoly num = piv * m.e[i][j] - fac * m.e[r][j];
                auto q = num.divide_exact(prev);
                if (!q)
                    throw std::logic_error("polynomial Bareiss division failed");
                if (q->terms().size() > term_cap)
                    throw BudgetExceededError("symbolic elimination too large", {});
                m.e[i][j] = std::move(*q);
            }
        }
        prev = piv;
        ++r;
    }
    return r;
}

MultiPoly poly_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols, std::size_t term_cap) {
    const std::size_t g = rows.size();
    if (g == 1) return m.e[rows[0]][cols[0]];
    MultiPoly acc(m.e[0][0].vars());
    std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < g; ++k) {
        if (m.e[rows[0]][cols[k]].is_zero()) continue;
        std::vector<std::size_t> subcols;
        for (std::size_t j = 0; j < g; ++j)
            if (j != k) subcols.push_back(cols[j]);
        MultiPoly sub = poly_det(m, subrows, subcols, term_cap);
        MultiPoly term = m.e[rows[0]][cols[k]] * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
        if (acc.terms().size() > term_cap)
            throw BudgetExceededError("minor expansion too large", {});
    }
    return acc;
}

void enumerate_subsets(std::size_t n, std::size_t k,
                       const std::function<bool(const std::vector<std::size_t>&)>& emit) {
    if (k > n || k == 0) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!emit(idx)) return;
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

}  // namespace

std::vector<std::vector<MultiPoly>> symbolic_operator(const Representation& m,
                                                      const FlowBasis& fb) {
    std::vector<std::string> vars;
    for (const auto& a : fb.quiver().arrows()) vars.push_back(a.id);
    const std::size_t n = m.total_dim();
    std::vector<std::vector<MultiPoly>> mat(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    const Quiver& q = m.quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        MultiPoly phi = fb.phi_arrow_poly(a);
        if (phi.is_zero()) continue;
        const Matrix& blk = m.map(a);
        const std::size_t ro = m.offset(q.head(a)), co = m.offset(q.tail(a));
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) {
                const mpq_class v = blk.at(i, j).rat();
                if (v == 0) continue;
                mat[ro + i][co + j] = mat[ro + i][co + j] + phi.scaled(v);
            }
    }
    return mat;
}

std::vector<std::pair<EvalPoint, RankProfile>> find_profile_drops(
    const Representation& m, const FlowBasis& fb, const Locus& locus,
    const RankProfile& target, const CjtBudget& budget, std::uint64_t seed,
    FieldSpec work_field, bool stop_at_first) {
    WitnessSearch ws{m, fb, locus, target, stop_at_first, {}, {}};
    std::uint64_t state = seed ^ 0x9dd1c7a83fb2e5ULL;

    // (a) coordinate strata
    search_zero_strata(ws, budget, state);

    // (b) phi hypersurfaces, then minor hypersurfaces of symbolic powers
    if (!ws.found() || !stop_at_first) {
        const std::size_t n = fb.quiver().num_arrows();
        std::vector<MultiPoly> polys;
        for (std::size_t a = 0; a < n; ++a)
            polys.push_back(fb.phi_arrow_poly(a));
        if (n <= 8 && m.total_dim() <= 12) {
            try {
                PolyMatrix sym{symbolic_operator(m, fb)};
                PolyMatrix pw = sym;
                std::set<std::string> seen;
                for (std::size_t i = 1; i < m.quiver().loewy_length(); ++i) {
                    if (i > 1) pw = poly_matrix_mul(pw, sym, 4000);
                    for (const auto& row : pw.e)
                        for (const auto& p : row)
                            if (!p.is_zero() && !p.is_constant() &&
                                seen.insert(p.str()).second && polys.size() < 200)
                                polys.push_back(p);
                }
            } catch (const BudgetExceededError&) {
                // symbolic side too big; strata and dense search still run
            }
        }
        const std::size_t attempts = std::max<std::size_t>(
            1, budget.per_stratum / std::max<std::size_t>(1, polys.size()));
        for (const auto& p : polys) {
            search_hypersurface(ws, p, attempts, state);
            if (ws.found() && stop_at_first) break;
        }
    }

    // (c) dense points: screened in the working field, then any observed
    // drop is re-verified over Q on the lifted integer point.
    if (!ws.found() || !stop_at_first) {
        const std::size_t n = fb.quiver().num_arrows();
        for (std::size_t k = 0; k < budget.dense; ++k) {
            if (ws.found() && stop_at_first) break;
            if (work_field.kind == FieldSpec::Kind::Prime) {
                std::vector<Scalar> coords;
                for (std::size_t a = 0; a < n; ++a)
                    coords.push_back(Scalar::prime_field(
                        splitmix64(state) % (work_field.prime - 1) + 1,
                        work_field.prime));
                EvalPoint p = EvalPoint::make(coords);
                if (!locus.contains(fb, p)) continue;
                RankProfile prof = rank_profile(build_operator(m, fb, p));
                bool below = false;
                for (std::size_t i = 0; i < prof.r.size(); ++i)
                    if (prof.r[i] < target.r[i]) { below = true; break; }
                if (!below) continue;
                std::vector<Scalar> lifted;
                for (const auto& c : coords)
                    lifted.push_back(Scalar::rational(c.lift()));
                ws.consider(std::move(lifted));
            } else {
                std::vector<Scalar> coords;
                for (std::size_t a = 0; a < n; ++a)
                    coords.push_back(Scalar::rational(
                        static_cast<long>(splitmix64(state) % 1000000ULL) + 1, 1));
                ws.consider(std::move(coords));
            }
        }
    }

    std::vector<std::pair<EvalPoint, RankProfile>> out;
    for (std::size_t i = 0; i < ws.points.size(); ++i)
        out.emplace_back(ws.points[i], ws.profiles[i]);
    return out;
}

CjtVerdict check_constant_jordan_type(const Representation& m,
                                      const FlowBasis& fb, const Locus& locus,
                                      const CjtBudget& budget,
                                      std::uint64_t seed, FieldSpec work_field) {
    std::vector<EvalPoint> generic_pts;
    try {
        generic_pts = locus.sample(fb, work_field, seed, budget.generic_samples);
    } catch (const SamplingBudgetError& e) {
        throw LocusEmptyError(std::string("locus sampler failed: ") + e.what());
    }
    if (generic_pts.empty()) throw LocusEmptyError("locus sampler returned nothing");

    CjtVerdict v;
    v.generic_profile = max_profile_over(m, fb, generic_pts);
    v.samples_used = generic_pts.size();

    auto drops = find_profile_drops(m, fb, locus, v.generic_profile, budget,
                                    seed, work_field, true);
    if (!drops.empty()) {
        v.kind = CjtVerdict::Kind::NotConstant;
        v.witness = drops.front().first;
        v.witness_profile = drops.front().second;
        try {
            v.jtype = jordan_type_from_profile(v.generic_profile, m.total_dim());
        } catch (const std::logic_error&) {
            v.jtype = JordanType{
                std::vector<long long>(m.quiver().loewy_length(), 0)};
        }
        return v;
    }

    v.kind = CjtVerdict::Kind::ConstantProbable;
    v.jtype = jordan_type_from_profile(v.generic_profile, m.total_dim());
    v.failure_bound =
        sampling_failure_bound(v.generic_profile, fb, v.samples_used, work_field);
    return v;
}

bool reverify_not_constant(const Representation& m, const FlowBasis& fb,
                           const Locus& locus, const CjtVerdict& v) {
    if (v.kind != CjtVerdict::Kind::NotConstant || !v.witness || !v.witness_profile)
        return false;
    if (v.witness->field() != FieldSpec::rational()) return false;
    if (!locus.contains(fb, *v.witness)) return false;
    RankProfile prof = rank_profile(build_operator(m, fb, *v.witness));
    if (!(prof == *v.witness_profile)) return false;
    for (std::size_t i = 0; i < prof.r.size(); ++i)
        if (prof.r[i] < v.generic_profile.r[i]) return true;
    return false;
}

CertifyResult certify_constant_rank(const Representation& m, const FlowBasis& fb,
                                    std::size_t power, const CertifyCaps& caps) {
    CertifyResult res;
    const std::size_t L = m.quiver().loewy_length();
    if (power == 0 || power > L) {
        res.refusal_reason = "power out of range";
        return res;
    }
    if (fb.quiver().num_arrows() > caps.max_arrows) {
        res.refusal_reason = "arrow count exceeds certification cap";
        return res;
    }
    if (m.total_dim() > caps.max_total_dim) {
        res.refusal_reason = "total dimension exceeds certification cap";
        return res;
    }

    RankCertificate cert;
    cert.power = power;
    try {
        PolyMatrix sym{symbolic_operator(m, fb)};
        PolyMatrix pw = sym;
        for (std::size_t i = 1; i < power; ++i)
            pw = poly_matrix_mul(pw, sym, caps.max_poly_terms);

        cert.generic_rank = poly_matrix_rank(pw, caps.max_poly_terms);

        if (cert.generic_rank > 0) {
            std::vector<std::size_t> nzrows, nzcols;
            for (std::size_t i = 0; i < pw.rows(); ++i)
                for (std::size_t j = 0; j < pw.cols(); ++j)
                    if (!pw.e[i][j].is_zero()) {
                        if (std::find(nzrows.begin(), nzrows.end(), i) == nzrows.end())
                            nzrows.push_back(i);
                        if (std::find(nzcols.begin(), nzcols.end(), j) == nzcols.end())
                            nzcols.push_back(j);
                    }
            std::sort(nzrows.begin(), nzrows.end());
            std::sort(nzcols.begin(), nzcols.end());

            const std::size_t g = cert.generic_rank;
            std::set<std::string> seen;
            bool capped = false;
            std::size_t count = 0;
            enumerate_subsets(nzrows.size(), g, [&](const std::vector<std::size_t>& ri) {
                std::vector<std::size_t> rows;
                for (std::size_t k : ri) rows.push_back(nzrows[k]);
                bool keep_going = true;
                enumerate_subsets(nzcols.size(), g, [&](const std::vector<std::size_t>& ci) {
                    if (++count > caps.max_minors) {
                        capped = true;
                        keep_going = false;
                        return false;
                    }
                    std::vector<std::size_t> cols;
                    for (std::size_t k : ci) cols.push_back(nzcols[k]);
                    MultiPoly d = poly_det(pw, rows, cols, caps.max_poly_terms);
                    if (!d.is_zero() && seen.insert(d.str()).second)
                        cert.minor_ideal.push_back(d);
                    return true;
                });
                return keep_going;
            });
            if (capped) {
                res.refusal_reason = "minor count exceeds certification cap";
                return res;
            }
        }

        // Saturation check on each chart D(Y_r) via Rabinowitsch.
        if (!cert.minor_ideal.empty()) {
            std::vector<std::string> vars = cert.minor_ideal[0].vars();
            std::string zname = "z_sat";
            while (std::find(vars.begin(), vars.end(), zname) != vars.end())
                zname += "_";
            std::vector<std::string> zvars = vars;
            zvars.push_back(zname);

            auto extend = [&](const MultiPoly& f) {
                MultiPoly g(zvars);
                for (const auto& [e, c] : f.terms()) {
                    MultiPoly::Exponents e2 = e;
                    e2.push_back(0);
                    g.add_term(e2, c);
                }
                return g;
            };

            for (const auto& r : fb.points()) {
                std::vector<MultiPoly> gens;
                for (const auto& f : cert.minor_ideal) gens.push_back(extend(f));
                MultiPoly zy(zvars);
                MultiPoly::Exponents e(zvars.size(), 0);
                for (std::size_t a = 0; a < r.r.size(); ++a)
                    e[a] = static_cast<int>(r.r[a]);
                e.back() = 1;
                zy.add_term(e, 1);
                zy.add_term(MultiPoly::Exponents(zvars.size(), 0), -1);
                gens.push_back(zy);

                auto gb = buchberger(gens, MonomialOrder::Degrevlex, caps.gb_budget);
                if (!is_unit_ideal_basis(gb)) {
                    res.refusal_reason =
                        "non-unit saturation: the minor ideal meets the chart of "
                        "flow point " + fb.monomial_poly(r).str();
                    return res;
                }
                cert.checks.push_back({r, std::move(gb)});
            }
        }
    } catch (const BudgetExceededError& e) {
        res.refusal_reason = std::string("budget exceeded: ") + e.what();
        return res;
    }

    res.certified = true;
    res.certificate = std::move(cert);
    return res;
}

bool reverify_certificate(const RankCertificate& cert) {
    for (const auto& check : cert.checks) {
        if (check.groebner_basis.empty()) return false;
        MultiPoly one = MultiPoly::constant(check.groebner_basis[0].vars(), 1);
        if (!normal_form(one, check.groebner_basis, MonomialOrder::Degrevlex)
                 .is_zero())
            return false;
    }
    return true;
}

VMaxReport v_max(const Representation& m, const FlowBasis& fb,
                 std::size_t samples, std::uint64_t seed, FieldSpec work_field) {
    Locus locus = Locus::full_semistable();
    auto pts = locus.sample(fb, work_field, seed, std::max<std::size_t>(1, samples));
    VMaxReport rep;
    rep.generic_profile = max_profile_over(m, fb, pts);

    CjtBudget budget;
    budget.per_stratum = std::max<std::size_t>(4, samples);
    budget.dense = std::max<std::size_t>(4, samples);
    auto drops = find_profile_drops(m, fb, locus, rep.generic_profile, budget,
                                    seed, work_field, false);
    for (auto& [p, prof] : drops) {
        rep.non_maximal_points.push_back(std::move(p));
        rep.non_maximal_profiles.push_back(std::move(prof));
    }
    return rep;
}

}  // namespace qjt
