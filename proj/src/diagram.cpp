#include "rinv/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rinv/portgraph.hpp"

namespace rinv {

size_t Diagram::crossing_count() const {
    size_t c = 0;
    for (const auto& n : nodes)
        if (n.kind == NodeKind::Crossing) ++c;
    return c;
}

size_t Diagram::vertex_count() const {
    size_t c = 0;
    for (const auto& n : nodes)
        if (n.kind == NodeKind::Vertex) ++c;
    return c;
}

namespace {

constexpr int kMaxLabel = 1000000;

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

long parse_number(const std::string& tok, int line_no, long lo, long hi,
                  const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        parse_fail(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    if (v < lo || v > hi)
        parse_fail(line_no, std::string(what) + " out of range: '" + tok + "'");
    return v;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
    Diagram d;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "X" || head == "V") {
            if (toks.size() != 5)
                parse_fail(line_no, head + " line needs exactly 4 edge labels");
            Node n;
            n.kind = (head == "X") ? NodeKind::Crossing : NodeKind::Vertex;
            for (int i = 0; i < 4; ++i)
                n.ends[static_cast<size_t>(i)] = static_cast<int>(parse_number(
                    toks[static_cast<size_t>(i + 1)], line_no, 1, kMaxLabel,
                    "edge label"));
            d.nodes.push_back(n);
        } else if (head == "O") {
            if (toks.size() != 2)
                parse_fail(line_no, "O line needs exactly one count");
            d.free_loops += parse_number(toks[1], line_no, 0, kMaxLabel, "loop count");
        } else {
            parse_fail(line_no, "unknown line kind '" + head + "'");
        }
    }
    auto problems = validate(d);
    if (!problems.empty()) {
        std::string msg = "invalid diagram:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw ParseError(msg);
    }
    return d;
}

std::string render_diagram(const Diagram& d) {
    std::ostringstream out;
    for (const auto& n : d.nodes) {
        out << (n.kind == NodeKind::Crossing ? 'X' : 'V');
        for (int e : n.ends) out << ' ' << e;
        out << '\n';
    }
    if (d.free_loops > 0 || d.nodes.empty()) out << "O " << d.free_loops << '\n';
    return out.str();
}

std::vector<std::string> validate(const Diagram& d) {
    std::vector<std::string> problems;
    if (d.free_loops < 0) problems.push_back("negative free loop count");
    std::map<int, int> uses;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        for (int e : d.nodes[i].ends) {
            if (e < 1 || e > kMaxLabel) {
                problems.push_back("node " + std::to_string(i) +
                                   ": edge label out of range");
                continue;
            }
            ++uses[e];
        }
    }
    for (const auto& [lab, cnt] : uses) {
        if (cnt != 2)
            problems.push_back("edge " + std::to_string(lab) + " used " +
                               std::to_string(cnt) + " times (want 2)");
    }
    return problems;
}

void require_valid(const Diagram& d, const std::string& context) {
    auto problems = validate(d);
    if (problems.empty()) return;
    std::string msg = context + ":";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
}

Diagram mirror(const Diagram& d) {
    Diagram m = d;
    for (auto& n : m.nodes) {
        if (n.kind != NodeKind::Crossing) continue;
        n.ends = {n.ends[1], n.ends[2], n.ends[3], n.ends[0]};
    }
    return m;
}

int max_label(const Diagram& d) {
    int m = 0;
    for (const auto& n : d.nodes)
        for (int e : n.ends) m = std::max(m, e);
    return m;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram u = a;
    const int shift = max_label(a);
    for (const auto& n : b.nodes) {
        Node m = n;
        for (auto& e : m.ends) e += shift;
        u.nodes.push_back(m);
    }
    u.free_loops += b.free_loops;
    return u;
}

std::vector<std::array<Port, 2>> label_ports(const Diagram& d) {
    std::vector<std::array<Port, 2>> ports(static_cast<size_t>(max_label(d)) + 1,
                                           {Port{-1, 0}, Port{-1, 0}});
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        for (int s = 0; s < 4; ++s) {
            int lab = d.nodes[i].ends[static_cast<size_t>(s)];
            auto& slots = ports[static_cast<size_t>(lab)];
            Port here{static_cast<int>(i), s};
            if (slots[0].node < 0)
                slots[0] = here;
            else if (slots[1].node < 0)
                slots[1] = here;
            else
                throw ValidationError("edge " + std::to_string(lab) +
                                      " used more than twice");
        }
    }
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node >= 0 && ports[lab][1].node < 0)
            throw ValidationError("edge " + std::to_string(lab) + " used once");
    }
    return ports;
}

Diagram canonical_labels(const Diagram& d) {
    std::map<int, int> remap;
    int next = 1;
    Diagram r = d;
    for (auto& n : r.nodes) {
        for (auto& e : n.ends) {
            auto it = remap.find(e);
            if (it == remap.end()) it = remap.emplace(e, next++).first;
            e = it->second;
        }
    }
    return r;
}

namespace {

// Minimal union-find over 4n node slots.
struct SlotUF {
    std::vector<int> parent;
    explicit SlotUF(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
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

long component_count(const Diagram& d) {
    const int n = static_cast<int>(d.nodes.size());
    if (n == 0) return d.free_loops;
    SlotUF uf(static_cast<size_t>(4 * n));
    auto ports = label_ports(d);
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        uf.unite(4 * ports[lab][0].node + ports[lab][0].slot,
                 4 * ports[lab][1].node + ports[lab][1].slot);
    }
    for (int i = 0; i < n; ++i) {
        if (d.nodes[static_cast<size_t>(i)].kind == NodeKind::Crossing) {
            uf.unite(4 * i + 0, 4 * i + 2);
            uf.unite(4 * i + 1, 4 * i + 3);
        } else {
            uf.unite(4 * i + 0, 4 * i + 1);
            uf.unite(4 * i + 1, 4 * i + 2);
            uf.unite(4 * i + 2, 4 * i + 3);
        }
    }
    std::set<int> roots;
    for (int s = 0; s < 4 * n; ++s) roots.insert(uf.find(s));
    return static_cast<long>(roots.size()) + d.free_loops;
}

Diagram remove_edges(const Diagram& d, const std::vector<int>& labels) {
    require_valid(d, "remove_edges input");
    auto ports = label_ports(d);
    auto known = [&](int lab) {
        return lab >= 1 && lab < static_cast<int>(ports.size()) &&
               ports[static_cast<size_t>(lab)][0].node >= 0;
    };
    // Close the removal set over strands: deleting a label deletes the whole
    // strand it lies on, which continues through the opposite slot of every
    // crossing it meets.
    std::set<int> removed;
    std::vector<int> queue;
    for (int lab : labels) {
        if (!known(lab))
            throw ValidationError("remove_edges: unknown edge label " +
                                  std::to_string(lab));
        if (removed.insert(lab).second) queue.push_back(lab);
    }
    while (!queue.empty()) {
        int lab = queue.back();
        queue.pop_back();
        for (const Port& p : ports[static_cast<size_t>(lab)]) {
            const Node& node = d.nodes[static_cast<size_t>(p.node)];
            if (node.kind != NodeKind::Crossing) continue;
            int cont = node.ends[static_cast<size_t>((p.slot + 2) % 4)];
            if (removed.insert(cont).second) queue.push_back(cont);
        }
    }

    PortGraph pg = to_ports(d);
    // Drop removed edges (pg.edges is ordered by label, but labels may be
    // sparse; match by ports).
    {
        std::vector<std::pair<Port, Port>> kept;
        for (const auto& e : pg.edges) {
            int lab = d.nodes[static_cast<size_t>(e.first.node)]
                          .ends[static_cast<size_t>(e.first.slot)];
            if (!removed.count(lab)) kept.push_back(e);
        }
        pg.edges = std::move(kept);
    }

    std::vector<int> dead;
    std::vector<std::vector<std::pair<int, int>>> pass;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& node = d.nodes[i];
        std::vector<int> live_slots;
        for (int s = 0; s < 4; ++s)
            if (!removed.count(node.ends[static_cast<size_t>(s)]))
                live_slots.push_back(s);
        if (live_slots.size() == 4) continue;  // untouched
        if (live_slots.empty()) {
            dead.push_back(static_cast<int>(i));
            pass.push_back({});
            continue;
        }
        if (live_slots.size() != 2)
            throw ValidationError(
                "remove_edges: node " + std::to_string(i) +
                " would be left with degree " + std::to_string(live_slots.size()));
        dead.push_back(static_cast<int>(i));
        pass.push_back({{live_slots[0], live_slots[1]}});
    }
    dissolve_nodes(pg, dead, pass);
    return from_ports(pg);
}

}  // namespace rinv
