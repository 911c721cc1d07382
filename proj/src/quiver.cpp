#include "f1rep/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f1rep {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows))
{
    if (n_ <= 0)
        throw std::invalid_argument("Quiver: vertex count must be positive");
    std::set<std::string> ids;
    for (const Arrow& a : arrows_) {
        if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
            throw std::invalid_argument("Quiver: arrow '" + a.id + "' has endpoint outside 1.." +
                                        std::to_string(n_));
        if (!ids.insert(a.id).second)
            throw std::invalid_argument("Quiver: duplicate arrow id '" + a.id + "'");
    }
    from_.resize(n_);
    to_.resize(n_);
    for (int i = 0; i < arrow_count(); ++i) {
        from_[arrows_[i].source - 1].push_back(i);
        to_[arrows_[i].target - 1].push_back(i);
    }
}

int Quiver::arrow_index(const std::string& id) const
{
    for (int i = 0; i < arrow_count(); ++i)
        if (arrows_[i].id == id)
            return i;
    return -1;
}

bool Quiver::is_linear_chain() const
{
    if (arrow_count() != n_ - 1)
        return false;
    std::vector<bool> seen(n_, false);
    for (const Arrow& a : arrows_) {
        if (a.source != a.target + 1)
            return false;
        if (seen[a.target - 1])
            return false;
        seen[a.target - 1] = true;
    }
    return true;
}

bool Quiver::is_tree() const
{
    if (arrow_count() != n_ - 1)
        return false;
    // Connectivity of the underlying graph; acyclicity follows from the edge count.
    std::vector<std::vector<int>> adj(n_);
    for (const Arrow& a : arrows_) {
        adj[a.source - 1].push_back(a.target - 1);
        adj[a.target - 1].push_back(a.source - 1);
    }
    std::vector<bool> vis(n_, false);
    std::vector<int> stack{0};
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<std::vector<int>> Quiver::connected_subquivers() const
{
    std::vector<std::vector<int>> adj(n_);
    for (const Arrow& a : arrows_) {
        adj[a.source - 1].push_back(a.target - 1);
        adj[a.target - 1].push_back(a.source - 1);
    }
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << n_); ++mask) {
        int first = -1;
        for (int v = 0; v < n_; ++v)
            if (mask & (1 << v)) {
                first = v;
                break;
            }
        std::vector<bool> vis(n_, false);
        std::vector<int> stack{first};
        vis[first] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if ((mask & (1 << w)) && !vis[w]) {
                    vis[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count == __builtin_popcount(mask)) {
            std::vector<int> verts;
            for (int v = 0; v < n_; ++v)
                if (mask & (1 << v))
                    verts.push_back(v + 1);
            out.push_back(std::move(verts));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::shared_ptr<const Quiver> Quiver::linear(int n)
{
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i)
        arrows.push_back({"a" + std::to_string(i), i + 1, i});
    return std::make_shared<Quiver>(n, std::move(arrows));
}

int total(const DimensionVector& d)
{
    return std::accumulate(d.begin(), d.end(), 0);
}

}  // namespace f1rep
