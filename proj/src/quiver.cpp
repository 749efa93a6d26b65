#include "qjt/quiver.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <set>
#include <stdexcept>

namespace qjt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> vseen(vertices_.begin(), vertices_.end());
    if (vseen.size() != vertices_.size())
        throw std::invalid_argument("duplicate vertex ids");
    std::set<std::string> aseen;
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (!aseen.insert(arrows_[a].id).second)
            throw std::invalid_argument("duplicate arrow id: " + arrows_[a].id);
        tails_.push_back(vertex_index(arrows_[a].tail));
        heads_.push_back(vertex_index(arrows_[a].head));
        out_[tails_[a]].push_back(a);
        in_[heads_[a]].push_back(a);
    }

    // Kahn's algorithm; a leftover vertex means a cycle.
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (std::size_t h : heads_) ++indeg[h];
    std::deque<std::size_t> q;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indeg[v] == 0) q.push_back(v);
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop_front();
        topo_.push_back(v);
        for (std::size_t a : out_[v])
            if (--indeg[heads_[a]] == 0) q.push_back(heads_[a]);
    }
    if (topo_.size() != vertices_.size())
        throw CycleError("quiver has a directed cycle");

    level_in_.assign(vertices_.size(), 0);
    for (std::size_t v : topo_)
        for (std::size_t a : in_[v])
            level_in_[v] = std::max(level_in_[v], level_in_[tails_[a]] + 1);
    std::size_t longest = 0;
    for (std::size_t l : level_in_) longest = std::max(longest, l);
    loewy_ = longest + 1;

    reach_in_.assign(loewy_, std::vector<bool>(vertices_.size(), false));
    reach_out_.assign(loewy_, std::vector<bool>(vertices_.size(), false));
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        reach_in_[0][v] = true;
        reach_out_[0][v] = true;
    }
    for (std::size_t l = 1; l < loewy_; ++l)
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
            if (reach_in_[l - 1][tails_[a]]) reach_in_[l][heads_[a]] = true;
            if (reach_out_[l - 1][heads_[a]]) reach_out_[l][tails_[a]] = true;
        }

    if (!is_connected() && !vertices_.empty())
        std::cerr << "warning: quiver is not connected\n";
}

std::size_t Quiver::vertex_index(const std::string& id) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == id) return v;
    throw std::invalid_argument("unknown vertex: " + id);
}

std::size_t Quiver::arrow_index(const std::string& id) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].id == id) return a;
    throw std::invalid_argument("unknown arrow: " + id);
}

bool Quiver::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<std::size_t> q{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop_front();
        auto visit = [&](std::size_t w) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                q.push_back(w);
            }
        };
        for (std::size_t a : out_[v]) visit(heads_[a]);
        for (std::size_t a : in_[v]) visit(tails_[a]);
    }
    return count == vertices_.size();
}

std::vector<std::size_t> Quiver::gamma_in(std::size_t l) const {
    if (l >= loewy_) throw std::out_of_range("gamma_in: l exceeds L-1");
    std::vector<std::size_t> r;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (reach_in_[l][v]) r.push_back(v);
    return r;
}

std::vector<std::size_t> Quiver::gamma_out(std::size_t l) const {
    if (l >= loewy_) throw std::out_of_range("gamma_out: l exceeds L-1");
    std::vector<std::size_t> r;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (reach_out_[l][v]) r.push_back(v);
    return r;
}

std::vector<std::vector<std::size_t>> Quiver::paths_between(
    std::size_t x, std::size_t y, std::size_t l) const {
    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t> cur;
    // DFS over out-arrows in index order keeps the output lexicographic.
    auto rec = [&](auto&& self, std::size_t v, std::size_t remaining) -> void {
        if (remaining == 0) {
            if (v == y) result.push_back(cur);
            return;
        }
        std::vector<std::size_t> sorted = out_[v];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t a : sorted) {
            cur.push_back(a);
            self(self, heads_[a], remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, x, l);
    return result;
}

std::vector<std::vector<std::size_t>> Quiver::paths_from(std::size_t x) const {
    std::vector<std::vector<std::size_t>> all;
    for (std::size_t l = 0; l < loewy_; ++l)
        for (std::size_t y = 0; y < vertices_.size(); ++y)
            for (auto& p : paths_between(x, y, l)) all.push_back(p);
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return all;
}

std::vector<std::vector<std::size_t>> Quiver::paths_into(std::size_t x) const {
    std::vector<std::vector<std::size_t>> all;
    for (std::size_t l = 0; l < loewy_; ++l)
        for (std::size_t y = 0; y < vertices_.size(); ++y)
            for (auto& p : paths_between(y, x, l)) all.push_back(p);
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return all;
}

std::shared_ptr<const Quiver> kronecker_quiver(std::size_t num_arrows) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 1; i <= num_arrows; ++i)
        arrows.push_back({"a" + std::to_string(i), "1", "2"});
    return std::make_shared<Quiver>(std::vector<std::string>{"1", "2"},
                                    std::move(arrows));
}

}  // namespace qjt
