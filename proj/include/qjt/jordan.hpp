#ifndef QJT_JORDAN_HPP
#define QJT_JORDAN_HPP

#include "qjt/flows.hpp"
#include "qjt/linalg.hpp"
#include "qjt/representation.hpp"

#include <string>
#include <vector>

namespace qjt {

/*
 * The nilpotent operator attached to a representation at an evaluation
 * point: the block matrix whose (head, tail) block of each arrow is
 * phi_a(alpha) * M_a, laid out by vertex blocks in topological order.
 */
class NilpotentOperator {
public:
    NilpotentOperator(const Representation& rep, const FlowBasis& fb,
                      EvalPoint point, Matrix mat)
        : rep_(&rep), fb_(&fb), point_(std::move(point)), mat_(std::move(mat)) {}

    const Matrix& matrix() const { return mat_; }
    const Representation& rep() const { return *rep_; }
    const FlowBasis& flow_basis() const { return *fb_; }
    const EvalPoint& point() const { return point_; }

private:
    const Representation* rep_;
    const FlowBasis* fb_;
    EvalPoint point_;
    Matrix mat_;
};

// Ranks of successive powers: r[0] = dim M >= r[1] >= ... >= r[L] = 0.
struct RankProfile {
    std::vector<std::size_t> r;

    std::size_t loewy() const { return r.size() - 1; }
    bool operator==(const RankProfile&) const = default;
    // true when this profile is <= other componentwise and strictly
    // smaller somewhere.
    bool strictly_below(const RankProfile& other) const;
    std::string str() const;
};

// Multiplicities a[i-1] of Jordan blocks of size i, i = 1..L. Entries may
// be negative for virtual types.
struct JordanType {
    std::vector<long long> a;

    std::size_t loewy() const { return a.size(); }
    long long total_dim() const;
    bool operator==(const JordanType&) const = default;
    std::string str() const;  // e.g. "[2]^3 [1]^1"
};

JordanType jtype_add(const JordanType& s, const JordanType& t);
JordanType jtype_sub(const JordanType& s, const JordanType& t);

NilpotentOperator build_operator(const Representation& m, const FlowBasis& fb,
                                 const EvalPoint& p);

// A^1, A^2, ..., A^maxpow with early exit at zero (trailing zeros filled).
std::vector<Matrix> operator_powers(const NilpotentOperator& op,
                                    std::size_t maxpow);

RankProfile rank_profile(const NilpotentOperator& op);

// a_i = r_{i-1} + r_{i+1} - 2 r_i; throws on convexity violation.
JordanType jordan_type_from_profile(const RankProfile& p, std::size_t total_dim);
// r_i = sum_{j > i} a_j (j - i): the inverse of the above.
RankProfile profile_from_jordan_type(const JordanType& t);

JordanType jordan_type_at(const Representation& m, const FlowBasis& fb,
                          const EvalPoint& p);

// Componentwise max of the rank profiles over the sampled points.
RankProfile max_profile_over(const Representation& m, const FlowBasis& fb,
                             const std::vector<EvalPoint>& points);

struct GenericJordanResult {
    JordanType jtype;
    RankProfile profile;
    std::size_t samples_used = 0;
    // Schwartz-Zippel style bound on the probability that the sampled
    // maximum misses the generic profile.
    mpq_class failure_bound;
};

GenericJordanResult generic_jordan_type(
    const Representation& m, const FlowBasis& fb, std::size_t samples,
    std::uint64_t seed, FieldSpec field = FieldSpec::prime_field(kDefaultPrime));

// The Schwartz-Zippel bound for a given profile/sample regime; exposed so
// locus-relative verdicts can report it too.
mpq_class sampling_failure_bound(const RankProfile& profile, const FlowBasis& fb,
                                 std::size_t samples, const FieldSpec& field);

}  // namespace qjt

#endif
