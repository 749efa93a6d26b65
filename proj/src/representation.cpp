#include "qjt/representation.hpp"

#include "qjt/linalg.hpp"

#include <map>
#include <stdexcept>

namespace qjt {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t path_target(const Quiver& q, const std::vector<std::size_t>& path,
                        std::size_t source) {
    return path.empty() ? source : q.head(path.back());
}

}  // namespace

Representation::Representation(std::shared_ptr<const Quiver> quiver,
                               std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_->num_vertices())
        throw std::invalid_argument("dims length != vertex count");
    if (maps_.size() != quiver_->num_arrows())
        throw std::invalid_argument("maps length != arrow count");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        if (maps_[a].field() != FieldSpec::rational())
            throw FieldMismatchError("representation matrices must be rational");
        if (maps_[a].rows() != dims_[quiver_->head(a)] ||
            maps_[a].cols() != dims_[quiver_->tail(a)])
            throw std::invalid_argument(
                "arrow matrix shape mismatch at " + quiver_->arrows()[a].id);
    }
    offsets_.assign(dims_.size(), 0);
    std::size_t off = 0;
    for (std::size_t v : quiver_->topo_order()) {
        offsets_[v] = off;
        off += dims_[v];
    }
    total_ = off;
}

Representation simple(std::shared_ptr<const Quiver> q, const std::string& x) {
    std::size_t xi = q->vertex_index(x);
    std::vector<std::size_t> dims(q->num_vertices(), 0);
    dims[xi] = 1;
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q->num_arrows(); ++a)
        maps.push_back(Matrix::zeros(dims[q->head(a)], dims[q->tail(a)],
                                     FieldSpec::rational()));
    return Representation(std::move(q), std::move(dims), std::move(maps));
}

namespace {

// Shared by projective() and injective(): builds a representation on a
// per-vertex path basis given the path action of each arrow.
Representation rep_on_paths(
    std::shared_ptr<const Quiver> q,
    const std::vector<std::vector<std::size_t>>& paths,
    std::size_t base_vertex, bool paths_start_at_base) {
    const Quiver& Q = *q;
    // Group paths by the vertex carrying them.
    std::vector<std::vector<std::vector<std::size_t>>> at(Q.num_vertices());
    std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> where;
    for (const auto& p : paths) {
        std::size_t v = paths_start_at_base
                            ? path_target(Q, p, base_vertex)
                            : (p.empty() ? base_vertex : Q.tail(p.front()));
        where[p] = {v, at[v].size()};
        at[v].push_back(p);
    }
    std::vector<std::size_t> dims(Q.num_vertices());
    for (std::size_t v = 0; v < Q.num_vertices(); ++v) dims[v] = at[v].size();

    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
        Matrix m = Matrix::zeros(dims[Q.head(a)], dims[Q.tail(a)],
                                 FieldSpec::rational());
        const auto& basis = at[Q.tail(a)];
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::vector<std::size_t> image;
            if (paths_start_at_base) {
                // P(x): append the arrow to the path.
                image = basis[j];
                image.push_back(a);
            } else {
                // I(x): strip the arrow if it is the path's first step,
                // otherwise the action is zero.
                if (basis[j].empty() || basis[j].front() != a) continue;
                image.assign(basis[j].begin() + 1, basis[j].end());
            }
            auto it = where.find(image);
            if (it == where.end())
                throw std::logic_error("path basis image missing");
            m.set(it->second.second, j, Scalar::rational(1, 1));
        }
        maps.push_back(std::move(m));
    }
    return Representation(std::move(q), std::move(dims), std::move(maps));
}

}  // namespace

Representation projective(std::shared_ptr<const Quiver> q, const std::string& x) {
    std::size_t xi = q->vertex_index(x);
    auto paths = q->paths_from(xi);
    return rep_on_paths(std::move(q), paths, xi, true);
}

Representation injective(std::shared_ptr<const Quiver> q, const std::string& x) {
    std::size_t xi = q->vertex_index(x);
    auto paths = q->paths_into(xi);
    return rep_on_paths(std::move(q), paths, xi, false);
}

Representation kronecker_P(std::size_t n) {
    auto q = kronecker_quiver(2);
    std::vector<std::size_t> dims{n, n + 1};
    Matrix a = Matrix::zeros(n + 1, n, FieldSpec::rational());
    Matrix b = Matrix::zeros(n + 1, n, FieldSpec::rational());
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, i, Scalar::rational(1, 1));
        b.set(i + 1, i, Scalar::rational(1, 1));
    }
    return Representation(std::move(q), std::move(dims), {std::move(a), std::move(b)});
}

Representation kronecker_I(std::size_t n) {
    auto q = kronecker_quiver(2);
    std::vector<std::size_t> dims{n + 1, n};
    Matrix a = Matrix::zeros(n, n + 1, FieldSpec::rational());
    Matrix b = Matrix::zeros(n, n + 1, FieldSpec::rational());
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, i, Scalar::rational(1, 1));
        b.set(i, i + 1, Scalar::rational(1, 1));
    }
    return Representation(std::move(q), std::move(dims), {std::move(a), std::move(b)});
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (m.quiver_ptr().get() != n.quiver_ptr().get() &&
        m.quiver().vertex_ids() != n.quiver().vertex_ids())
        throw std::invalid_argument("direct sum over different quivers");
    const Quiver& q = m.quiver();
    std::vector<std::size_t> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        dims[v] = m.dim(v) + n.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        Matrix blk = Matrix::zeros(dims[q.head(a)], dims[q.tail(a)],
                                   FieldSpec::rational());
        blk.insert_block(0, 0, m.map(a));
        blk.insert_block(m.dim(q.head(a)), m.dim(q.tail(a)), n.map(a));
        maps.push_back(std::move(blk));
    }
    return Representation(m.quiver_ptr(), std::move(dims), std::move(maps));
}

namespace {

Representation quotient_killing(const Representation& m,
                                const std::vector<bool>& killed) {
    const Quiver& q = m.quiver();
    std::vector<std::size_t> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        dims[v] = killed[v] ? 0 : m.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t h = q.head(a), t = q.tail(a);
        if (dims[h] == 0 || dims[t] == 0)
            maps.push_back(Matrix::zeros(dims[h], dims[t], FieldSpec::rational()));
        else
            maps.push_back(m.map(a));
    }
    return Representation(m.quiver_ptr(), std::move(dims), std::move(maps));
}

}  // namespace

Representation quotient_by_R(const Representation& m, std::size_t l) {
    if (l == 0) throw std::invalid_argument("quotient_by_R needs l >= 1");
    const Quiver& q = m.quiver();
    std::vector<bool> killed(q.num_vertices(), false);
    if (l < q.loewy_length())
        for (std::size_t v : q.gamma_in(l)) killed[v] = true;
    return quotient_killing(m, killed);
}

Representation quotient_by_S(const Representation& m, std::size_t l) {
    if (l == 0) throw std::invalid_argument("quotient_by_S needs l >= 1");
    const Quiver& q = m.quiver();
    std::vector<bool> killed(q.num_vertices(), true);
    if (l < q.loewy_length())
        for (std::size_t v : q.gamma_out(l)) killed[v] = false;
    return quotient_killing(m, killed);
}

Representation random_rep(std::shared_ptr<const Quiver> q,
                          const std::vector<std::size_t>& dims,
                          std::uint64_t seed, long bound) {
    std::uint64_t state = seed ^ 0x8e2ab7c10f5b3dULL;
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q->num_arrows(); ++a) {
        Matrix m = Matrix::zeros(dims[q->head(a)], dims[q->tail(a)],
                                 FieldSpec::rational());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                long v = static_cast<long>(splitmix64(state) %
                                           (2 * bound + 1)) - bound;
                m.set(i, j, Scalar::rational(v, 1));
            }
        maps.push_back(std::move(m));
    }
    return Representation(std::move(q), dims, std::move(maps));
}

bool is_morphism(const Representation& src, const Representation& dst,
                 const RepMorphism& f) {
    const Quiver& q = src.quiver();
    if (f.vertex_maps.size() != q.num_vertices()) return false;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (f.vertex_maps[v].rows() != dst.dim(v) ||
            f.vertex_maps[v].cols() != src.dim(v))
            return false;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t h = q.head(a), t = q.tail(a);
        if (!(f.vertex_maps[h] * src.map(a) == dst.map(a) * f.vertex_maps[t]))
            return false;
    }
    return true;
}

void validate_ses(const ShortExactSequence& s) {
    if (!is_morphism(s.sub, s.mid, s.inclusion) ||
        !is_morphism(s.mid, s.quot, s.projection))
        throw std::invalid_argument("SES maps are not morphisms");
    const Quiver& q = s.mid.quiver();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        const Matrix& i = s.inclusion.vertex_maps[v];
        const Matrix& p = s.projection.vertex_maps[v];
        if (rank(i) != s.sub.dim(v))
            throw std::invalid_argument("inclusion not injective");
        if (rank(p) != s.quot.dim(v))
            throw std::invalid_argument("projection not surjective");
        if (!(p * i).is_zero())
            throw std::invalid_argument("composite not zero");
        if (s.sub.dim(v) + s.quot.dim(v) != s.mid.dim(v))
            throw std::invalid_argument("dimension count not exact");
    }
}

}  // namespace qjt
