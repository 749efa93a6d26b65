#include "qjt/jordan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qjt {

bool RankProfile::strictly_below(const RankProfile& other) const {
    if (r.size() != other.r.size())
        throw std::invalid_argument("profile length mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] > other.r[i]) return false;
        if (r[i] < other.r[i]) strict = true;
    }
    return strict;
}

std::string RankProfile::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

long long JordanType::total_dim() const {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(i + 1) * a[i];
    return s;
}

std::string JordanType::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (any) os << " ";
        os << "[" << (i + 1) << "]^" << a[i];
        any = true;
    }
    return any ? os.str() : "0";
}

JordanType jtype_add(const JordanType& s, const JordanType& t) {
    if (s.a.size() != t.a.size())
        throw std::invalid_argument("Jordan type length mismatch");
    JordanType r = s;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += t.a[i];
    return r;
}

JordanType jtype_sub(const JordanType& s, const JordanType& t) {
    if (s.a.size() != t.a.size())
        throw std::invalid_argument("Jordan type length mismatch");
    JordanType r = s;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= t.a[i];
    return r;
}

NilpotentOperator build_operator(const Representation& m, const FlowBasis& fb,
                                 const EvalPoint& p) {
    if (&m.quiver() != &fb.quiver() &&
        m.quiver().vertex_ids() != fb.quiver().vertex_ids())
        throw std::invalid_argument("representation and flow basis quiver mismatch");
    const Quiver& q = m.quiver();
    if (p.alpha.size() != q.num_arrows())
        throw std::invalid_argument("evaluation point arity mismatch");
    const FieldSpec f = p.field();
    Matrix mat = Matrix::zeros(m.total_dim(), m.total_dim(), f);
    const std::vector<Scalar> phi = phi_all_arrows(fb, p);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if (phi[a].is_zero()) continue;
        if (m.dim(q.head(a)) == 0 || m.dim(q.tail(a)) == 0) continue;
        mat.accumulate_block(m.offset(q.head(a)), m.offset(q.tail(a)),
                             m.map(a).to_field(f), phi[a]);
    }
#ifndef NDEBUG
    {
        // Nilpotency gate: A^L must vanish.
        Matrix pw = mat;
        for (std::size_t i = 1; i < q.loewy_length() && !pw.is_zero(); ++i)
            pw = pw * mat;
        if (!pw.is_zero())
            throw std::logic_error("operator is not nilpotent of index <= L");
    }
#endif
    return NilpotentOperator(m, fb, p, std::move(mat));
}

std::vector<Matrix> operator_powers(const NilpotentOperator& op,
                                    std::size_t maxpow) {
    std::vector<Matrix> powers;
    if (maxpow == 0) return powers;
    powers.push_back(op.matrix());
    for (std::size_t i = 1; i < maxpow; ++i) {
        if (powers.back().is_zero()) {
            powers.push_back(powers.back());
        } else {
            powers.push_back(powers.back() * op.matrix());
        }
    }
    return powers;
}

RankProfile rank_profile(const NilpotentOperator& op) {
    const std::size_t L = op.rep().quiver().loewy_length();
    RankProfile prof;
    prof.r.assign(L + 1, 0);
    prof.r[0] = op.rep().total_dim();
    Matrix pw = op.matrix();
    for (std::size_t i = 1; i <= L; ++i) {
        if (pw.is_zero()) break;  // all later ranks stay zero
        prof.r[i] = rank(pw);
        if (i < L) pw = pw * op.matrix();
    }
    if (prof.r[L] != 0)
        throw std::logic_error("rank profile does not vanish at L");
    for (std::size_t i = 1; i <= L; ++i)
        if (prof.r[i] > prof.r[i - 1])
            throw std::logic_error("rank profile is not monotone");
    return prof;
}

JordanType jordan_type_from_profile(const RankProfile& p, std::size_t total_dim) {
    const std::size_t L = p.loewy();
    JordanType t;
    t.a.assign(L, 0);
    for (std::size_t i = 1; i <= L; ++i) {
        const long long prev = static_cast<long long>(p.r[i - 1]);
        const long long next = (i + 1 <= L) ? static_cast<long long>(p.r[i + 1]) : 0;
        const long long cur = static_cast<long long>(p.r[i]);
        const long long ai = prev + next - 2 * cur;
        if (ai < 0)
            throw std::logic_error("rank profile is not convex");
        t.a[i - 1] = ai;
    }
    if (t.total_dim() != static_cast<long long>(total_dim))
        throw std::logic_error("Jordan block sizes do not account for dim M");
    return t;
}

RankProfile profile_from_jordan_type(const JordanType& t) {
    const std::size_t L = t.loewy();
    RankProfile p;
    p.r.assign(L + 1, 0);
    for (std::size_t i = 0; i <= L; ++i) {
        long long s = 0;
        for (std::size_t j = i + 1; j <= L; ++j)
            s += t.a[j - 1] * static_cast<long long>(j - i);
        p.r[i] = static_cast<std::size_t>(s);
    }
    return p;
}

JordanType jordan_type_at(const Representation& m, const FlowBasis& fb,
                          const EvalPoint& p) {
    return jordan_type_from_profile(rank_profile(build_operator(m, fb, p)),
                                    m.total_dim());
}

RankProfile max_profile_over(const Representation& m, const FlowBasis& fb,
                             const std::vector<EvalPoint>& points) {
    const std::size_t L = m.quiver().loewy_length();
    RankProfile best;
    best.r.assign(L + 1, 0);
    best.r[0] = m.total_dim();
    for (const auto& p : points) {
        RankProfile cur = rank_profile(build_operator(m, fb, p));
        for (std::size_t i = 0; i <= L; ++i)
            best.r[i] = std::max(best.r[i], cur.r[i]);
    }
    return best;
}

mpq_class sampling_failure_bound(const RankProfile& profile, const FlowBasis& fb,
                                 std::size_t samples, const FieldSpec& field) {
    // Each rank r_i drops below its maximum only on the zero set of a
    // nonzero g_i x g_i minor of A^i, of total degree <= g_i * i * d_phi.
    // One uniform sample from a size-S coordinate set hits it with
    // probability <= deg/S; all `samples` draws must miss for every i.
    const mpq_class S = field.kind == FieldSpec::Kind::Prime
                            ? mpq_class(static_cast<unsigned long>(field.prime - 1))
                            : mpq_class(1000000);
    const long dphi = fb.max_monomial_degree();
    mpq_class bound = 0;
    for (std::size_t i = 1; i < profile.r.size(); ++i) {
        if (profile.r[i] == 0) continue;
        mpq_class per = mpq_class(static_cast<long>(profile.r[i]) *
                                  static_cast<long>(i) * dphi) / S;
        if (per > 1) per = 1;
        mpq_class acc = 1;
        for (std::size_t s = 0; s < samples; ++s) acc *= per;
        bound += acc;
    }
    if (bound > 1) bound = 1;
    return bound;
}

GenericJordanResult generic_jordan_type(const Representation& m,
                                        const FlowBasis& fb,
                                        std::size_t samples, std::uint64_t seed,
                                        FieldSpec field) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    const auto points =
        sample_semistable(fb, SampleStrategy::Dense, field, seed, samples);
    GenericJordanResult res;
    res.profile = max_profile_over(m, fb, points);
    res.jtype = jordan_type_from_profile(res.profile, m.total_dim());
    res.samples_used = samples;
    res.failure_bound = sampling_failure_bound(res.profile, fb, samples, field);
    return res;
}

}  // namespace qjt
