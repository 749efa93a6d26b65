#ifndef QJT_REPRESENTATION_HPP
#define QJT_REPRESENTATION_HPP

#include "qjt/matrix.hpp"
#include "qjt/quiver.hpp"

#include <memory>
#include <vector>

namespace qjt {

/*
 * A finite-dimensional representation: one vector space dimension per
 * vertex and one exact matrix per arrow, shape dims[head] x dims[tail].
 * Matrices live over Q; evaluation-field conversion happens where an
 * operator is assembled. The total space is laid out by vertex blocks in
 * topological order.
 */
class Representation {
public:
    Representation(std::shared_ptr<const Quiver> quiver,
                   std::vector<std::size_t> dims, std::vector<Matrix> maps);

    const Quiver& quiver() const { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const Matrix& map(std::size_t a) const { return maps_[a]; }
    std::size_t total_dim() const { return total_; }
    std::size_t offset(std::size_t v) const { return offsets_[v]; }

private:
    std::shared_ptr<const Quiver> quiver_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

Representation simple(std::shared_ptr<const Quiver> q, const std::string& x);
Representation projective(std::shared_ptr<const Quiver> q, const std::string& x);
Representation injective(std::shared_ptr<const Quiver> q, const std::string& x);

// Preprojective / preinjective representations of the tame Kronecker
// quiver, of dimension 2n+1.
Representation kronecker_P(std::size_t n);
Representation kronecker_I(std::size_t n);

Representation direct_sum(const Representation& m, const Representation& n);

// M / R^l(M) and M / S^l(M); both are genuine quotient representations
// because R^l and S^l are subrepresentations. l >= 1.
Representation quotient_by_R(const Representation& m, std::size_t l);
Representation quotient_by_S(const Representation& m, std::size_t l);

// Entries drawn uniformly from {-bound, ..., bound} over Q, reproducibly.
Representation random_rep(std::shared_ptr<const Quiver> q,
                          const std::vector<std::size_t>& dims,
                          std::uint64_t seed, long bound = 5);

// A morphism is one matrix per vertex; shape dims_target[v] x dims_source[v].
struct RepMorphism {
    std::vector<Matrix> vertex_maps;
};

// Validates that the vertex maps intertwine the arrow actions.
bool is_morphism(const Representation& src, const Representation& dst,
                 const RepMorphism& f);

// 0 -> sub -> mid -> quot -> 0 with explicit maps; validated per vertex
// (injectivity, surjectivity, exactness, intertwining).
struct ShortExactSequence {
    Representation sub, mid, quot;
    RepMorphism inclusion, projection;
};

void validate_ses(const ShortExactSequence& s);

}  // namespace qjt

#endif
