#include "rinv/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rinv/bracket.hpp"
#include "rinv/invariant.hpp"
#include "rinv/moves.hpp"
#include "rinv/portgraph.hpp"

namespace rinv {

namespace {

struct LabelUF {
    std::vector<int> parent;
    explicit LabelUF(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

long long three_colorings(const Diagram& d) {
    require_valid(d, "three_colorings");
    if (d.has_vertices())
        throw DomainError("three_colorings: defined for links, not graphs");

    const int top = max_label(d) + 1;
    LabelUF uf(top);
    std::vector<bool> used(static_cast<size_t>(top), false);
    for (const Node& n : d.nodes) {
        for (int lab : n.ends) used[static_cast<size_t>(lab)] = true;
        uf.unite(n.ends[1], n.ends[3]);  // the over-strand stays one arc
    }

    std::map<int, int> arc_index;
    for (int lab = 1; lab < top; ++lab)
        if (used[static_cast<size_t>(lab)]) {
            int root = uf.find(lab);
            if (!arc_index.count(root))
                arc_index.emplace(root, static_cast<int>(arc_index.size()));
        }
    const int arcs = static_cast<int>(arc_index.size());
    if (arcs > 16) throw DomainError("three_colorings: too many arcs to enumerate");

    auto arc_of = [&](int lab) { return arc_index.at(uf.find(lab)); };
    std::vector<int> color(static_cast<size_t>(arcs), 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (const Node& n : d.nodes) {
            int o = color[static_cast<size_t>(arc_of(n.ends[1]))];
            int u = color[static_cast<size_t>(arc_of(n.ends[0]))];
            int v = color[static_cast<size_t>(arc_of(n.ends[2]))];
            if ((o + u + v) % 3 != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int i = 0;
        while (i < arcs && ++color[static_cast<size_t>(i)] == 3)
            color[static_cast<size_t>(i++)] = 0;
        if (i == arcs) break;
    }
    for (long k = 0; k < d.free_loops; ++k) count *= 3;
    return count;
}

bool writhe_check_knot(const Diagram& d) {
    require_valid(d, "writhe_check_knot");
    if (d.has_vertices())
        throw DomainError("writhe_check_knot: defined for links, not graphs");
    if (component_count(d) != 1)
        throw DomainError("writhe_check_knot: needs a one-component diagram");

    const Laurent br = kauffman_bracket(d);
    long w = 0;
    if (!d.nodes.empty()) {
        PortGraph pg = to_ports(d);
        std::vector<std::array<bool, 4>> entered(d.nodes.size(),
                                                 {false, false, false, false});
        const size_t edge_total = 2 * d.nodes.size();
        Port start{0, 0};
        Port in = start;
        size_t steps = 0;
        do {
            if (++steps > edge_total)
                throw std::logic_error("writhe walk failed to close");
            entered[static_cast<size_t>(in.node)][static_cast<size_t>(in.slot)] = true;
            Port out{in.node, (in.slot + 2) & 3};
            in = pg.mate(out);
        } while (in != start);
        if (steps != edge_total) return false;  // walk missed crossings

        for (size_t i = 0; i < d.nodes.size(); ++i) {
            int u_in = entered[i][0] ? 0 : entered[i][2] ? 2 : -1;
            int o_in = entered[i][1] ? 1 : entered[i][3] ? 3 : -1;
            if (u_in < 0 || o_in < 0) return false;  // both lanes must be crossed
            // Over-strand entering one slot counterclockwise from the
            // under-strand's entry is the negative crossing: the positive
            // curl's bracket is (-A^3) times the circle's.
            w += (o_in == ((u_in + 1) & 3)) ? -1 : 1;
        }
    }

    // f = (-A^3)^(-w) <d>; for a knot every exponent of f is 2 mod 4.
    Laurent f = br * Laurent::term(Int(w % 2 == 0 ? 1 : -1), static_cast<int>(-3 * w));
    for (const auto& [e, c] : f.terms())
        if (((e % 4) + 4) % 4 != 2) return false;
    return f * f.invert_variable() == br * br.invert_variable();
}

namespace {

// Handedness bookkeeping for the inserted tangles.  The twist variant v
// inserts one crossing; stacking two of the same handedness is a clasp.
// Which clasp variant corresponds to twist variant v, and which bracket
// coefficients go with it, were fixed once against exhaustive small cases
// and are locked in by the property tests.
Laurent sigma_coeff(int v) {
    if (v == 0) return lp_monomial(1, -1) - lp_monomial(1, 3);
    return lp_monomial(1, 1) - lp_monomial(1, -3);
}

Laurent unit_coeff(int v) { return lp_monomial(1, v == 0 ? 2 : -2); }

Laurent lift(const LambdaRational& r, int a, int b) {
    Laurent n = r.num;
    Laurent l1 = lp_monomial(1, 1) + lp_constant(1);
    Laurent l2 = lp_monomial(1, 1) + lp_constant(2);
    for (int i = r.den_pow1; i < a; ++i) n = n * l1;
    for (int i = r.den_pow2; i < b; ++i) n = n * l2;
    return n;
}

}  // namespace

int clasp_variant_for(int twist_variant) { return twist_variant & 1; }

SkeinReport skein_relation_check(const Diagram& d, int he, int hf, SkeinKind kind) {
    if (kind == SkeinKind::QuadraticBracket) {
        if (d.has_vertices())
            throw DomainError("quadratic bracket check: links only");
        const Laurent b0 = kauffman_bracket(d);
        for (int v = 0; v < 2; ++v) {
            Diagram d1 = insert_twist_chain(d, he, hf, 1, v);
            Diagram d2 = insert_clasp(d, he, hf, clasp_variant_for(v));
            Laurent lhs = kauffman_bracket(d2);
            Laurent rhs = sigma_coeff(v) * kauffman_bracket(d1) + unit_coeff(v) * b0;
            if (lhs != rhs) {
                std::ostringstream why;
                why << "quadratic identity failed (variant " << v << "): got "
                    << lhs.to_string("A") << ", expected " << rhs.to_string("A");
                return {false, why.str()};
            }
        }
        return {true, ""};
    }

    const LambdaRational r0 = r_graph(d);
    for (int v = 0; v < 2; ++v) {
        LambdaRational r2 = r_graph(insert_clasp(d, he, hf, clasp_variant_for(v)));
        LambdaRational r1 = r_graph(insert_twist_chain(d, he, hf, 1, v));
        LambdaRational rm = r_graph(insert_twist_chain(d, he, hf, 1, 1 - v));
        int a = std::max({r2.den_pow1, r1.den_pow1, r0.den_pow1, rm.den_pow1});
        int b = std::max({r2.den_pow2, r1.den_pow2, r0.den_pow2, rm.den_pow2});
        Laurent lam = lp_monomial(1, 1);
        Laurent one = lp_constant(1);
        Laurent lhs = lift(r2, a, b);
        Laurent rhs = (one - lam) * lift(r1, a, b) + (lam - one) * lift(r0, a, b) +
                      lift(rm, a, b);
        if (lhs != rhs) {
            std::ostringstream why;
            why << "cubic identity failed (variant " << v << "): got "
                << lhs.to_string("L") << ", expected " << rhs.to_string("L");
            return {false, why.str()};
        }
    }
    return {true, ""};
}

ConstituentScan constituent_links(const Diagram& d) {
    require_valid(d, "constituent_links");
    const int top = max_label(d) + 1;
    LabelUF uf(top);
    std::vector<bool> used(static_cast<size_t>(top), false);
    for (const Node& n : d.nodes) {
        for (int lab : n.ends) used[static_cast<size_t>(lab)] = true;
        if (n.kind == NodeKind::Crossing) {
            uf.unite(n.ends[0], n.ends[2]);
            uf.unite(n.ends[1], n.ends[3]);
        }
    }
    std::map<int, int> class_index;
    for (int lab = 1; lab < top; ++lab)
        if (used[static_cast<size_t>(lab)]) {
            int root = uf.find(lab);
            if (!class_index.count(root))
                class_index.emplace(root, static_cast<int>(class_index.size()));
        }
    const int k = static_cast<int>(class_index.size());
    if (k > 8)
        throw DomainError("constituent_links: too many strand classes to enumerate");

    ConstituentScan scan;
    const Laurent unl = lp_monomial(1, 1) + lp_constant(2);  // L + 2
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        auto kept = [&](int lab) {
            return (mask >> class_index.at(uf.find(lab))) & 1u;
        };
        bool feasible = true;
        for (const Node& n : d.nodes) {
            if (n.kind != NodeKind::Vertex) continue;
            int deg = 0;
            for (int lab : n.ends) deg += kept(lab) ? 1 : 0;
            if (deg != 0 && deg != 2) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        std::vector<int> dropped;
        for (int lab = 1; lab < top; ++lab)
            if (used[static_cast<size_t>(lab)] && !kept(lab)) dropped.push_back(lab);
        Constituent entry;
        for (auto& [root, idx] : class_index)
            if ((mask >> idx) & 1u) entry.strand_classes.push_back(idx);
        entry.link = remove_edges(d, dropped);
        entry.r = r_graph(entry.link);
        Laurent want = lp_constant(1);
        for (long c = component_count(entry.link); c > 0; --c) want = want * unl;
        entry.unlink_value = entry.r.is_polynomial() && entry.r.num == want;
        if (!entry.unlink_value) scan.any_linked = true;
        scan.entries.push_back(std::move(entry));
    }
    return scan;
}

}  // namespace rinv
