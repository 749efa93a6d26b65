#ifndef QJT_FLOWS_HPP
#define QJT_FLOWS_HPP

#include "qjt/multipoly.hpp"
#include "qjt/quiver.hpp"
#include "qjt/scalar.hpp"

#include <memory>
#include <vector>

namespace qjt {

class EmptySemistableLocusError : public std::runtime_error {
public:
    explicit EmptySemistableLocusError(const std::string& what)
        : std::runtime_error(what) {}
};

class SamplingBudgetError : public std::runtime_error {
public:
    explicit SamplingBudgetError(const std::string& what)
        : std::runtime_error(what) {}
};

// Integral weight on the vertices, summing to zero and not identically
// zero.
struct Weight {
    std::vector<long> sigma;  // by vertex index

    Weight(const Quiver& q, std::vector<long> values);
};

// Nonnegative integer flow with divergence sigma at every vertex.
struct FlowPoint {
    std::vector<long> r;  // by arrow index

    bool operator==(const FlowPoint&) const = default;
    bool operator<(const FlowPoint& o) const { return r < o.r; }
};

// One evaluation point alpha in arrow space; all coordinates share a field.
struct EvalPoint {
    std::vector<Scalar> alpha;  // by arrow index

    static EvalPoint make(std::vector<Scalar> coords);
    const FieldSpec& field() const { return alpha.at(0).field(); }
};

/*
 * The complete set I of lattice points of the flow polytope for a fixed
 * weight, enumerated once at construction in lexicographic arrow order.
 * Throws EmptySemistableLocusError when I is empty.
 */
class FlowBasis {
public:
    FlowBasis(std::shared_ptr<const Quiver> quiver, Weight weight);

    const Quiver& quiver() const { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
    const Weight& weight() const { return weight_; }
    const std::vector<FlowPoint>& points() const { return points_; }
    long arc_bound() const { return bound_; }

    // Y_r and phi_a as polynomials in the arrow variables.
    MultiPoly monomial_poly(const FlowPoint& r) const;
    MultiPoly phi_arrow_poly(std::size_t a) const;
    // Max total degree over the monomials Y_r.
    long max_monomial_degree() const;

private:
    std::shared_ptr<const Quiver> quiver_;
    Weight weight_;
    std::vector<FlowPoint> points_;
    long bound_ = 0;
};

FlowBasis enumerate_flow_points(std::shared_ptr<const Quiver> q, Weight w);

bool is_semistable(const FlowBasis& fb, const EvalPoint& p);

// phi_a(alpha) = sum_r r_a * Y_r(alpha), accumulated arrow-first.
Scalar phi_arrow(const FlowBasis& fb, const EvalPoint& p, std::size_t a);
// All coefficients at once, accumulated monomial-first. Equal to
// phi_arrow coordinatewise; the two routes cross-check each other.
std::vector<Scalar> phi_all_arrows(const FlowBasis& fb, const EvalPoint& p);
Scalar phi_path(const FlowBasis& fb, const EvalPoint& p,
                const std::vector<std::size_t>& path);

// Every vertex reached by a length-l path is reached by one with nonzero
// path coefficient, for l = 1..L-1.
bool in_F_inj(const FlowBasis& fb, const EvalPoint& p);

enum class SampleStrategy { Dense, Support, FInj };

std::vector<EvalPoint> sample_semistable(const FlowBasis& fb,
                                         SampleStrategy strategy,
                                         FieldSpec field, std::uint64_t seed,
                                         std::size_t count,
                                         std::size_t rejection_budget = 1000);

}  // namespace qjt

#endif
