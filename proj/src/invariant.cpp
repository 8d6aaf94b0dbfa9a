#include "rinv/invariant.hpp"

#include "rinv/bracket.hpp"
#include "rinv/portgraph.hpp"

namespace rinv {

std::vector<ResolutionTerm> expand_vertices(const Diagram& d) {
    std::vector<int> vertex_ids;
    for (size_t i = 0; i < d.nodes.size(); ++i)
        if (d.nodes[i].kind == NodeKind::Vertex) vertex_ids.push_back(static_cast<int>(i));
    const size_t v = vertex_ids.size();
    if (v > 12) throw DomainError("too many vertices to expand (limit 12)");

    std::vector<ResolutionTerm> out;
    out.reserve(static_cast<size_t>(1) << (2 * v));
    const uint64_t total = static_cast<uint64_t>(1) << (2 * v);
    for (uint64_t code = 0; code < total; ++code) {
        Diagram work = d;
        int smooth = 0;
        std::vector<int> dead;
        std::vector<std::vector<std::pair<int, int>>> pass;
        uint64_t c = code;
        for (size_t k = 0; k < v; ++k, c >>= 2) {
            Node& node = work.nodes[static_cast<size_t>(vertex_ids[k])];
            switch (c & 3) {
                case 0:  // smoothing joining (0,1),(2,3)
                    ++smooth;
                    dead.push_back(vertex_ids[k]);
                    pass.push_back({{0, 1}, {2, 3}});
                    break;
                case 1:  // smoothing joining (1,2),(3,0)
                    ++smooth;
                    dead.push_back(vertex_ids[k]);
                    pass.push_back({{1, 2}, {3, 0}});
                    break;
                case 2:  // crossing, same slot assignment
                    node.kind = NodeKind::Crossing;
                    break;
                case 3:  // crossing, ends rotated one slot
                    node.kind = NodeKind::Crossing;
                    node.ends = {node.ends[1], node.ends[2], node.ends[3],
                                 node.ends[0]};
                    break;
            }
        }
        PortGraph pg = to_ports(work);
        dissolve_nodes(pg, dead, pass);
        out.push_back(ResolutionTerm{smooth, from_ports(pg)});
    }
    return out;
}

Laurent r_link(const Diagram& d) {
    Laurent b = kauffman_bracket(d);
    Laurent q = b * b.invert_variable();
    if (!q.is_symmetric())
        throw DomainError("bracket product lost its A <-> 1/A symmetry");
    if (!q.exponents_divisible_by(4))
        throw DomainError("bracket product has an exponent not divisible by 4");
    return chebyshev_to_lambda(q.deflate_exponents(4));
}

LambdaRational r_graph(const Diagram& d) {
    require_valid(d, "r_graph input");
    const int v = static_cast<int>(d.vertex_count());
    const Laurent lambda = lp_monomial(1, 1);
    Laurent sum;
    for (const auto& term : expand_vertices(d)) {
        Laurent weight = lp_constant(1);
        for (int k = 0; k < term.smooth_count; ++k) weight *= lambda;
        sum += weight * r_link(term.link);
    }
    return rational_reduce(sum, v, v);
}

InvariantReport analyze(const Diagram& d) {
    InvariantReport rep;
    rep.r = r_graph(d);
    rep.at2 = rational_evaluate(rep.r, Rat(2));
    rep.at1 = rational_evaluate(rep.r, Rat(1));
    rep.at_minus1 = rational_evaluate(rep.r, Rat(-1));
    return rep;
}

}  // namespace rinv
