#ifndef QJT_HOMPROPS_HPP
#define QJT_HOMPROPS_HPP

#include "qjt/cjt.hpp"
#include "qjt/jordan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qjt {

class FInjRequiredError : public std::runtime_error {
public:
    explicit FInjRequiredError(const std::string& what)
        : std::runtime_error(what) {}
};

class LevelEmptyError : public std::runtime_error {
public:
    LevelEmptyError(std::size_t level, const std::string& what)
        : std::runtime_error(what), level(level) {}
    std::size_t level;
};

/*
 * The presentation map F^l_alpha from the injectives-free side: the
 * direct sum of projectives over Gamma^l_in maps into the one over
 * Gamma^l_out, componentwise by sum of phi_p-weighted length-l paths.
 * Stored as one matrix in the canonical path bases.
 */
struct PresentationMap {
    std::size_t l = 0;
    EvalPoint alpha{{Scalar()}};
    std::vector<std::size_t> gamma_in;   // summand vertices of the domain
    std::vector<std::size_t> gamma_out;  // summand vertices of the codomain
    Matrix matrix;                       // codomain_dim x domain_dim
};

PresentationMap presentation(const FlowBasis& fb, const EvalPoint& p,
                             std::size_t l);

// Decided combinatorially (one nonzero-phi length-l path into every
// vertex of Gamma^l_in); asserted to agree with the matrix rank.
bool is_F_alpha_injective(const FlowBasis& fb, const PresentationMap& pm);

// Exact subspace tests at one point, 1 <= l <= L.
bool is_EIP_at(const Representation& m, const FlowBasis& fb, const EvalPoint& p,
               std::size_t l);
bool is_EKP_at(const Representation& m, const FlowBasis& fb, const EvalPoint& p,
               std::size_t l);

// dim R^l(M) and dim of the Gamma^l_out block, the rank targets of the
// two properties.
std::size_t dim_R(const Representation& m, std::size_t l);
std::size_t dim_gamma_out_block(const Representation& m, std::size_t l);

struct PropertyVerdict {
    bool holds_probable = false;
    std::size_t samples_used = 0;
    mpq_class failure_bound;
    RankProfile target_profile;  // the profile the property forces
    std::optional<EvalPoint> witness;  // rational, re-verified failure point
    std::optional<RankProfile> witness_profile;
};

PropertyVerdict check_EIP(const Representation& m, const FlowBasis& fb,
                          const Locus& locus, const CjtBudget& budget,
                          std::uint64_t seed,
                          FieldSpec work_field = FieldSpec::prime_field(kDefaultPrime));
PropertyVerdict check_EKP(const Representation& m, const FlowBasis& fb,
                          const Locus& locus, const CjtBudget& budget,
                          std::uint64_t seed,
                          FieldSpec work_field = FieldSpec::prime_field(kDefaultPrime));

// Hom/Ext dimensions against the test module X^l_alpha via the rank
// formulas; alpha must lie in F_inj so the presentation is a resolution.
long hom_dim_X(const Representation& m, const FlowBasis& fb, const EvalPoint& p,
               std::size_t l);
long ext1_dim_X(const Representation& m, const FlowBasis& fb, const EvalPoint& p,
                std::size_t l);

struct QuotientLawEntry {
    EvalPoint point;
    JordanType observed;
    JordanType expected;
    bool ok = false;
};

struct QuotientLawReport {
    bool all_hold = false;
    JordanType base_type;  // constant type of M on the locus
    std::vector<QuotientLawEntry> entries;
};

enum class QuotientKind { ByR, ByS };

// Checks Jtype(M/R^l) (resp. M/S^l) against the closed-form law derived
// from M's constant type. Precondition: the matching EIP/EKP verdict.
QuotientLawReport quotient_jtype_laws(
    const Representation& m, const FlowBasis& fb, const Locus& locus,
    std::size_t l, QuotientKind kind, const PropertyVerdict& verdict,
    std::size_t samples, std::uint64_t seed,
    FieldSpec field = FieldSpec::prime_field(kDefaultPrime));

JordanType expected_quotient_R_type(const JordanType& t, std::size_t l);
JordanType expected_quotient_S_type(const JordanType& t, std::size_t l);

struct ClosureProbeEntry {
    std::string statement;
    bool premise_holds = false;
    bool conclusion_holds = false;
    bool consistent = false;  // premise implies conclusion
};

struct ClosureProbeReport {
    bool all_consistent = false;
    std::vector<ClosureProbeEntry> entries;
};

// Probes the torsion-pair closure laws on explicit short exact
// sequences: quotients of EIP members stay EIP, submodules of EKP members
// stay EKP, extensions of two members stay members.
ClosureProbeReport torsion_closure_probe(
    const std::vector<ShortExactSequence>& triples, const FlowBasis& fb,
    const Locus& locus, const CjtBudget& budget, std::uint64_t seed,
    FieldSpec work_field = FieldSpec::prime_field(kDefaultPrime));

struct InjectiveTypeTable {
    std::vector<std::size_t> level_vertices;  // x_l, l = 0..L-1
    std::vector<JordanType> rows;             // Jtype_{V_inj}(I(x_l))
};

// Jordan types of level injectives at sampled V_inj points. Throws
// LevelEmptyError when some level has no vertex.
InjectiveTypeTable injective_jtype_table(
    std::shared_ptr<const Quiver> q, const FlowBasis& fb, std::size_t samples,
    std::uint64_t seed, FieldSpec field = FieldSpec::prime_field(kDefaultPrime));

// Integer combination of table rows realizing the target vector; exact
// back-substitution through the unitriangular structure.
std::vector<long long> realize_target(const InjectiveTypeTable& table,
                                      const std::vector<long long>& target);

}  // namespace qjt

#endif
