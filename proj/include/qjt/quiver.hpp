#ifndef QJT_QUIVER_HPP
#define QJT_QUIVER_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace qjt {

class CycleError : public std::runtime_error {
public:
    explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
    std::string id;
    std::string tail;
    std::string head;
};

/*
 * Finite acyclic directed multigraph with user-supplied string ids.
 * Vertices get dense indices in declaration order; a topological order is
 * fixed at construction and drives every block layout downstream.
 */
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& id) const;
    std::size_t arrow_index(const std::string& id) const;
    std::size_t tail(std::size_t arrow) const { return tails_[arrow]; }
    std::size_t head(std::size_t arrow) const { return heads_[arrow]; }

    // Vertex indices in a fixed topological order.
    const std::vector<std::size_t>& topo_order() const { return topo_; }
    const std::vector<std::size_t>& out_arrows(std::size_t v) const {
        return out_[v];
    }
    const std::vector<std::size_t>& in_arrows(std::size_t v) const {
        return in_[v];
    }

    bool is_connected() const;

    // 1 + longest path length.
    std::size_t loewy_length() const { return loewy_; }

    // Longest incoming path length per vertex (levels Q_0(l)).
    std::size_t level_in(std::size_t v) const { return level_in_[v]; }

    // Vertices receiving / emitting some path of length l, 0 <= l < L.
    std::vector<std::size_t> gamma_in(std::size_t l) const;
    std::vector<std::size_t> gamma_out(std::size_t l) const;

    // All length-l paths x -> y as arrow-index sequences in traversal
    // order; lexicographic in arrow indices.
    std::vector<std::vector<std::size_t>> paths_between(std::size_t x,
                                                        std::size_t y,
                                                        std::size_t l) const;

    // All paths starting at x (resp. ending at x), including the trivial
    // one, ordered by (length, lex arrow sequence). These orders are the
    // canonical bases of P(x) and I(x).
    std::vector<std::vector<std::size_t>> paths_from(std::size_t x) const;
    std::vector<std::vector<std::size_t>> paths_into(std::size_t x) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> tails_, heads_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> topo_;
    std::vector<std::size_t> level_in_;
    std::size_t loewy_ = 1;
    // reach_in_[l][v]: some length-l path ends at v. reach_out_ likewise.
    std::vector<std::vector<bool>> reach_in_, reach_out_;
};

std::shared_ptr<const Quiver> kronecker_quiver(std::size_t num_arrows);

}  // namespace qjt

#endif
