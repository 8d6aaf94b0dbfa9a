#include "rinv/bracket.hpp"

#include <numeric>
#include <set>
#include <vector>

namespace rinv {

namespace {

// Union-find with union by size and an undo stack, so the state tree can be
// explored depth-first with O(1) rollback per union.  No path compression;
// find is O(log n) which is plenty at this scale.
class RollbackUF {
public:
    explicit RollbackUF(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
        return x;
    }

    // Returns true when the union closed a cycle (both ends already joined).
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            trail_.push_back(-1);
            return true;
        }
        if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a;
        size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
        trail_.push_back(b);
        return false;
    }

    void undo() {
        int b = trail_.back();
        trail_.pop_back();
        if (b < 0) return;
        int a = parent_[static_cast<size_t>(b)];
        parent_[static_cast<size_t>(b)] = b;
        size_[static_cast<size_t>(a)] -= size_[static_cast<size_t>(b)];
    }

private:
    std::vector<int> parent_;
    std::vector<long> size_;
    std::vector<int> trail_;
};

std::vector<std::pair<int, int>> edge_slot_pairs(const Diagram& d) {
    auto ports = label_ports(d);
    std::vector<std::pair<int, int>> pairs;
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        pairs.emplace_back(4 * ports[lab][0].node + ports[lab][0].slot,
                           4 * ports[lab][1].node + ports[lab][1].slot);
    }
    return pairs;
}

}  // namespace

Laurent kauffman_bracket(const Diagram& d) {
    if (d.has_vertices())
        throw DomainError("kauffman_bracket needs a link diagram (no vertices)");
    const int n = static_cast<int>(d.nodes.size());
    if (n > kMaxBracketCrossings)
        throw DomainError("diagram too large for exact state enumeration (" +
                          std::to_string(n) + " crossings, limit " +
                          std::to_string(kMaxBracketCrossings) + ")");

    // hist[a_minus_b + n][cycles] = number of states, accumulated in plain
    // integers (at most 2^n states) and expanded into exact coefficients once.
    std::vector<std::vector<int64_t>> hist(
        static_cast<size_t>(2 * n + 1), std::vector<int64_t>(static_cast<size_t>(2 * n + 1), 0));

    RollbackUF uf(4 * n == 0 ? 1 : 4 * n);
    long closed = 0;
    for (auto [a, b] : edge_slot_pairs(d))
        if (uf.unite(a, b)) ++closed;  // cannot happen on valid input

    // Depth-first over crossings; exp = (#A - #B) so far.  choice[k] packs
    // the branch taken at depth k in bit 0 and the number of cycles that
    // branch closed in the high bits, so backtracking can subtract them.
    std::vector<int> choice(static_cast<size_t>(n), -1);
    int depth = 0;
    int exp = 0;
    while (depth >= 0) {
        if (depth == n) {
            hist[static_cast<size_t>(exp + n)][static_cast<size_t>(closed)] += 1;
            --depth;
            continue;
        }
        int& c = choice[static_cast<size_t>(depth)];
        if (c >= 0) {
            // undo previous choice at this depth
            uf.undo();
            uf.undo();
            closed -= (c >> 4);
            exp += (c & 1) ? 1 : -1;  // undo: A added +1, B added -1
            int prev = c & 1;
            if (prev == 1) {
                c = -1;
                --depth;
                continue;
            }
            c = 1;
        } else {
            c = 0;
        }
        // apply choice (c&1): 0 = A joins (0,1),(2,3); 1 = B joins (0,3),(1,2)
        const int base = 4 * depth;
        int newly = 0;
        if ((c & 1) == 0) {
            newly += uf.unite(base + 0, base + 1) ? 1 : 0;
            newly += uf.unite(base + 2, base + 3) ? 1 : 0;
            exp += 1;
        } else {
            newly += uf.unite(base + 0, base + 3) ? 1 : 0;
            newly += uf.unite(base + 1, base + 2) ? 1 : 0;
            exp -= 1;
        }
        closed += newly;
        c = (newly << 4) | (c & 1);
        ++depth;
    }

    // Expand: bracket = sum hist[e][c] * A^e * delta^(c + free_loops).
    const Laurent delta = lp_monomial(-1, 2) + lp_monomial(-1, -2);
    long max_c = 0;
    for (const auto& row : hist)
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) max_c = std::max(max_c, static_cast<long>(c));
    std::vector<Laurent> dpow(static_cast<size_t>(max_c + d.free_loops + 1));
    dpow[0] = lp_constant(1);
    for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * delta;

    Laurent result;
    for (int e = -n; e <= n; ++e) {
        const auto& row = hist[static_cast<size_t>(e + n)];
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 0) continue;
            result += Laurent::term(Int(row[c]), e) *
                      dpow[c + static_cast<size_t>(d.free_loops)];
        }
    }
    return result;
}

long state_loop_count(const Diagram& d, uint64_t state) {
    if (d.has_vertices())
        throw DomainError("state_loop_count needs a link diagram (no vertices)");
    const int n = static_cast<int>(d.nodes.size());
    if (n > kMaxBracketCrossings)
        throw DomainError("diagram too large for exact state enumeration");
    if (n == 0) return d.free_loops;
    RollbackUF uf(4 * n);
    for (auto [a, b] : edge_slot_pairs(d)) uf.unite(a, b);
    for (int i = 0; i < n; ++i) {
        const int base = 4 * i;
        if ((state >> i) & 1) {
            uf.unite(base + 0, base + 3);
            uf.unite(base + 1, base + 2);
        } else {
            uf.unite(base + 0, base + 1);
            uf.unite(base + 2, base + 3);
        }
    }
    std::set<int> roots;
    for (int s = 0; s < 4 * n; ++s) roots.insert(uf.find(s));
    return static_cast<long>(roots.size()) + d.free_loops;
}

}  // namespace rinv
