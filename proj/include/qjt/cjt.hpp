#ifndef QJT_CJT_HPP
#define QJT_CJT_HPP

#include "qjt/groebner.hpp"
#include "qjt/jordan.hpp"

#include <functional>
#include <optional>
#include <string>

namespace qjt {

class LocusEmptyError : public std::runtime_error {
public:
    explicit LocusEmptyError(const std::string& what)
        : std::runtime_error(what) {}
};

/*
 * A locus is an open subset of arrow space relative to which verdicts are
 * made: the full semistable locus, V_inj, or a custom pair of membership
 * test + sampler (which must agree: sampled points pass the test).
 */
struct Locus {
    enum class Kind { FullSemistable, VInj, Custom };
    Kind kind = Kind::FullSemistable;
    std::string label = "v";
    std::function<bool(const FlowBasis&, const EvalPoint&)> member_fn;
    std::function<std::vector<EvalPoint>(const FlowBasis&, FieldSpec,
                                         std::uint64_t, std::size_t)>
        sampler_fn;

    static Locus full_semistable();
    static Locus vinj();
    static Locus custom(std::string label,
                        std::function<bool(const FlowBasis&, const EvalPoint&)> member,
                        std::function<std::vector<EvalPoint>(
                            const FlowBasis&, FieldSpec, std::uint64_t,
                            std::size_t)> sampler);

    bool contains(const FlowBasis& fb, const EvalPoint& p) const;
    std::vector<EvalPoint> sample(const FlowBasis& fb, FieldSpec field,
                                  std::uint64_t seed, std::size_t count) const;
};

struct CjtBudget {
    std::size_t generic_samples = 20;
    std::size_t per_stratum = 200;  // per stratum class
    std::size_t dense = 1000;
};

struct CjtVerdict {
    enum class Kind { ConstantProbable, NotConstant, CertifiedConstant };
    Kind kind = Kind::ConstantProbable;
    JordanType jtype;            // type of the generic (max) profile
    RankProfile generic_profile;
    std::size_t samples_used = 0;
    mpq_class failure_bound;     // ConstantProbable only
    // NotConstant only; the witness has rational coordinates and
    // re-verifies exactly: membership plus a strict rank drop.
    std::optional<EvalPoint> witness;
    std::optional<RankProfile> witness_profile;
};

CjtVerdict check_constant_jordan_type(
    const Representation& m, const FlowBasis& fb, const Locus& locus,
    const CjtBudget& budget, std::uint64_t seed,
    FieldSpec work_field = FieldSpec::prime_field(kDefaultPrime));

// Independent re-check of a NotConstant verdict over Q.
bool reverify_not_constant(const Representation& m, const FlowBasis& fb,
                           const Locus& locus, const CjtVerdict& v);

/*
 * Exact certification that rank(A^i) is constant on the semistable locus:
 * the ideal of g_i x g_i minors of the symbolic operator power must
 * saturate to the unit ideal on every chart D(Y_r) (Rabinowitsch trick).
 */
struct RankCertificate {
    std::size_t power = 0;         // i
    std::size_t generic_rank = 0;  // g_i over the function field
    std::vector<MultiPoly> minor_ideal;
    struct SaturationCheck {
        FlowPoint point;
        std::vector<MultiPoly> groebner_basis;  // reduced, of J + (z Y_r - 1)
    };
    std::vector<SaturationCheck> checks;
};

struct CertifyCaps {
    std::size_t max_arrows = 8;
    std::size_t max_total_dim = 12;
    std::size_t max_minors = 2000;
    std::size_t max_poly_terms = 20000;  // symbolic elimination budget
    BuchbergerBudget gb_budget;
};

struct CertifyResult {
    bool certified = false;
    std::string refusal_reason;
    std::optional<RankCertificate> certificate;
};

CertifyResult certify_constant_rank(const Representation& m, const FlowBasis& fb,
                                    std::size_t power,
                                    const CertifyCaps& caps = {});

// Re-reduces 1 against each stored Groebner basis; all must reach 0.
bool reverify_certificate(const RankCertificate& cert);

struct VMaxReport {
    RankProfile generic_profile;
    std::vector<EvalPoint> non_maximal_points;  // rational, verified
    std::vector<RankProfile> non_maximal_profiles;
};

// Generic profile plus every discovered non-maximal locus point (an
// under-approximation of the complement of V_max).
VMaxReport v_max(const Representation& m, const FlowBasis& fb,
                 std::size_t samples, std::uint64_t seed,
                 FieldSpec work_field = FieldSpec::prime_field(kDefaultPrime));

// Symbolic operator matrix over Q[Y_a]; entry (i,j) of A with the block
// layout of build_operator. Shared by certification and witness search.
std::vector<std::vector<MultiPoly>> symbolic_operator(const Representation& m,
                                                      const FlowBasis& fb);

/*
 * Hunts locus points whose rank profile falls strictly below `target` at
 * some index: first coordinate strata, then phi / minor hypersurfaces,
 * then dense samples screened in the working field. Every returned point
 * is rational and re-verified over Q. Deterministic given the seed.
 */
std::vector<std::pair<EvalPoint, RankProfile>> find_profile_drops(
    const Representation& m, const FlowBasis& fb, const Locus& locus,
    const RankProfile& target, const CjtBudget& budget, std::uint64_t seed,
    FieldSpec work_field, bool stop_at_first);

}  // namespace qjt

#endif
