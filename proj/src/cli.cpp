#include "rinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rinv/bracket.hpp"
#include "rinv/diagram.hpp"
#include "rinv/invariant.hpp"
#include "rinv/moves.hpp"
#include "rinv/oracles.hpp"
#include "rinv/rng.hpp"
#include "rinv/topology.hpp"

namespace rinv {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long small_int(const Int& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::runtime_error("coefficient too large for JSON output");
    return v.convert_to<long long>();
}

json rational_json(const LambdaRational& r) {
    json num = json::array();
    int top = r.num.is_zero() ? -1 : r.num.max_exp();
    for (int e = 0; e <= top; ++e) num.push_back(small_int(r.num.coeff(e)));
    return json{{"num", num},
                {"den_pow_l1", r.den_pow1},
                {"den_pow_l2", r.den_pow2}};
}

json report_json(const InvariantReport& rep) {
    json j = rational_json(rep.r);
    j["special"] = {{"2", rep.at2.to_string()},
                    {"1", rep.at1.to_string()},
                    {"-1", rep.at_minus1.to_string()}};
    return j;
}

int cmd_eval(const std::string& path, bool as_json, std::ostream& out) {
    Diagram d = parse_diagram(slurp(path));
    InvariantReport rep = analyze(d);
    if (as_json) {
        out << report_json(rep).dump(2) << "\n";
    } else {
        out << "R = " << rep.r.to_string("L") << "\n";
        out << "R(2) = " << rep.at2.to_string() << "\n";
        out << "R(1) = " << rep.at1.to_string() << "\n";
        out << "R(-1) = " << rep.at_minus1.to_string() << "\n";
    }
    return 0;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct ExpectedRow {
    std::string file, r, at2, at1, atm1;
};

std::vector<ExpectedRow> read_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<ExpectedRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(t);
        std::string col;
        while (std::getline(ss, col, '|')) cols.push_back(trim(col));
        if (cols.size() != 5)
            throw std::runtime_error("expected 5 |-separated columns: " + line);
        rows.push_back({cols[0], cols[1], cols[2], cols[3], cols[4]});
    }
    return rows;
}

}  // namespace

int cmd_table(const std::string& corpus_dir, std::ostream& out, bool as_json) {
    auto rows = read_expected(corpus_dir + "/expected.txt");
    json jrows = json::array();
    int mismatches = 0, skipped = 0;
    for (const auto& row : rows) {
        std::string path = corpus_dir + "/" + row.file;
        std::ifstream probe(path);
        if (!probe) {
            ++skipped;
            if (as_json)
                jrows.push_back({{"name", row.file}, {"status", "skip"}});
            else
                out << "SKIP " << row.file << " (missing file)\n";
            continue;
        }
        InvariantReport rep = analyze(parse_diagram(slurp(path)));
        std::string got_r = rep.r.to_string("L");
        std::string got2 = rep.at2.to_string();
        std::string got1 = rep.at1.to_string();
        std::string gotm = rep.at_minus1.to_string();
        bool ok = got_r == row.r && got2 == row.at2 && got1 == row.at1 &&
                  gotm == row.atm1;
        if (!ok) ++mismatches;
        if (as_json) {
            jrows.push_back({{"name", row.file},
                             {"status", ok ? "ok" : "mismatch"},
                             {"r", got_r},
                             {"special", {{"2", got2}, {"1", got1}, {"-1", gotm}}}});
        } else if (ok) {
            out << "ok   " << row.file << "  R = " << got_r << "  (" << got2
                << ", " << got1 << ", " << gotm << ")\n";
        } else {
            out << "MISMATCH " << row.file << "\n";
            if (got_r != row.r)
                out << "  R: got " << got_r << ", want " << row.r << "\n";
            if (got2 != row.at2)
                out << "  R(2): got " << got2 << ", want " << row.at2 << "\n";
            if (got1 != row.at1)
                out << "  R(1): got " << got1 << ", want " << row.at1 << "\n";
            if (gotm != row.atm1)
                out << "  R(-1): got " << gotm << ", want " << row.atm1 << "\n";
        }
    }
    if (as_json) {
        out << json{{"ok", mismatches == 0},
                    {"rows", jrows},
                    {"skipped", skipped},
                    {"mismatches", mismatches}}
                   .dump(2)
            << "\n";
    } else {
        out << (mismatches == 0 ? "table ok" : "table FAILED") << " ("
            << rows.size() - static_cast<size_t>(skipped) << " checked, " << skipped
            << " skipped)\n";
    }
    return mismatches == 0 ? 0 : 1;
}

namespace {

struct WalkFailure {
    Diagram before;
    MoveSpec move{};
    LambdaRational r_before, r_after;
};

// Choose a move: uniform over the kinds present, then uniform within the
// kind, so cheap-to-enumerate kinds do not dominate the walk.
MoveSpec pick_move(const std::vector<MoveSpec>& moves, Rng& rng) {
    std::vector<MoveKind> kinds;
    for (const auto& m : moves)
        if (kinds.empty() || std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end())
            kinds.push_back(m.kind);
    MoveKind kind = kinds[rng.below(kinds.size())];
    std::vector<const MoveSpec*> pool;
    for (const auto& m : moves)
        if (m.kind == kind) pool.push_back(&m);
    return *pool[rng.below(pool.size())];
}

// Shrink a failing (diagram, move) pair: greedily apply reducing moves as
// long as some move of the same kind still changes the invariant.
void minimize_failure(WalkFailure& f, const MoveLimits& lim) {
    for (int round = 0; round < 64; ++round) {
        bool reduced = false;
        for (const auto& red : applicable_moves(f.before, lim)) {
            if (red.kind != MoveKind::R1Remove && red.kind != MoveKind::R2Remove &&
                red.kind != MoveKind::CapRemove)
                continue;
            Diagram smaller = apply_move(f.before, red);
            LambdaRational r_small = r_graph(smaller);
            for (const auto& m2 : applicable_moves(smaller, lim)) {
                if (m2.kind != f.move.kind) continue;
                Diagram after = apply_move(smaller, m2);
                LambdaRational r_after = r_graph(after);
                if (r_after != r_small) {
                    f.before = smaller;
                    f.move = m2;
                    f.r_before = r_small;
                    f.r_after = r_after;
                    reduced = true;
                    break;
                }
            }
            if (reduced) break;
        }
        if (!reduced) return;
    }
}

// When a move has a syntactic inverse, return it: applying the pair must
// reproduce the original diagram exactly (up to canonical labels).
bool inverse_of(const MoveSpec& m, const Diagram& before, MoveSpec& inv) {
    const int n = static_cast<int>(before.nodes.size());
    switch (m.kind) {
        case MoveKind::R1Add:
            inv = {MoveKind::R1Remove, n, (m.b + 1) & 3, 0, 0};
            return true;
        case MoveKind::R2Add:
            inv = {MoveKind::R2Remove, n, ((m.c & 1) + 1) & 3, n + 1, m.c & 1};
            return true;
        default:
            // Mirroring is its own inverse only up to a slot rotation of
            // every crossing record, which structural equality cannot see;
            // the other kinds have no syntactic inverse at all.
            return false;
    }
}

int cmd_check(const std::string& path, uint64_t seed, int iters, bool as_json,
              std::ostream& out) {
    Diagram start = parse_diagram(slurp(path));
    require_valid(start, "check input");
    const LambdaRational r0 = r_graph(start);
    const long genus0 = total_genus(start);

    MoveLimits lim;
    lim.max_crossings = std::min(
        12, std::max(10, static_cast<int>(start.crossing_count()) + 4));
    lim.max_vertices = static_cast<int>(start.vertex_count());

    Rng rng(seed ^ 0xc0ffee1234567890ULL);
    Diagram d = start;
    long long moves_done = 0, inverses_done = 0, skein_done = 0;

    for (int step = 0; step < iters; ++step) {
        auto moves = applicable_moves(d, lim);
        if (moves.empty()) break;
        MoveSpec m = pick_move(moves, rng);
        Diagram next = apply_move(d, m);
        require_valid(next, "check: move output");
        if (total_genus(next) != genus0)
            throw std::logic_error("check: move changed the surface genus: " +
                                   move_to_string(m) + " on\n" + render_diagram(d));
        LambdaRational r = r_graph(next);
        ++moves_done;
        if (r != r0) {
            WalkFailure f{d, m, r_graph(d), r};
            minimize_failure(f, lim);
            if (as_json) {
                out << json{{"ok", false},
                            {"diagram", render_diagram(f.before)},
                            {"move", move_to_string(f.move)},
                            {"r_before", f.r_before.to_string("L")},
                            {"r_after", f.r_after.to_string("L")}}
                           .dump(2)
                    << "\n";
            } else {
                out << "move invariance FAILED at step " << step << "\n";
                out << "diagram:\n" << render_diagram(f.before);
                out << "move: " << move_to_string(f.move) << "\n";
                out << "R before: " << f.r_before.to_string("L") << "\n";
                out << "R after:  " << f.r_after.to_string("L") << "\n";
            }
            return 1;
        }

        MoveSpec inv;
        if (inverse_of(m, d, inv)) {
            Diagram back = apply_move(next, inv);
            ++inverses_done;
            if (back != canonical_labels(d)) {
                if (as_json) {
                    out << json{{"ok", false},
                                {"diagram", render_diagram(d)},
                                {"move", move_to_string(m)},
                                {"inverse", move_to_string(inv)},
                                {"detail", "move + inverse did not round-trip"}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "inverse round-trip FAILED at step " << step << "\n";
                    out << "diagram:\n" << render_diagram(d);
                    out << "move: " << move_to_string(m)
                        << ", inverse: " << move_to_string(inv) << "\n";
                }
                return 1;
            }
        }
        d = next;

        // A skein-identity spot check on the current diagram every few moves.
        if (step % 5 == 4) {
            Faces faces = compute_faces(d);
            std::vector<std::pair<int, int>> pairs;
            for (const auto& orbit : faces.orbits)
                for (size_t i = 0; i < orbit.size(); ++i)
                    for (size_t j = 0; j < orbit.size(); ++j)
                        if (i != j)
                            pairs.emplace_back(4 * orbit[i].node + orbit[i].slot,
                                               4 * orbit[j].node + orbit[j].slot);
            if (!pairs.empty()) {
                auto [he, hf] = pairs[rng.below(pairs.size())];
                SkeinKind kind = d.has_vertices() ? SkeinKind::CubicR
                                                  : SkeinKind::QuadraticBracket;
                SkeinReport rep = skein_relation_check(d, he, hf, kind);
                ++skein_done;
                if (!rep.ok) {
                    if (as_json) {
                        out << json{{"ok", false},
                                    {"diagram", render_diagram(d)},
                                    {"context", {he, hf}},
                                    {"detail", rep.detail}}
                                   .dump(2)
                            << "\n";
                    } else {
                        out << "skein check FAILED at step " << step << "\n";
                        out << "diagram:\n" << render_diagram(d);
                        out << "context: half-edges " << he << ", " << hf << "\n";
                        out << rep.detail << "\n";
                    }
                    return 1;
                }
            }
        }
    }

    if (as_json) {
        out << json{{"ok", true},
                    {"moves", moves_done},
                    {"inverse_round_trips", inverses_done},
                    {"skein_contexts", skein_done},
                    {"r", r0.to_string("L")}}
                   .dump(2)
            << "\n";
    } else {
        out << "check passed: " << moves_done << " moves, " << inverses_done
            << " inverse round-trips, " << skein_done << " skein contexts; R = "
            << r0.to_string("L") << "\n";
    }
    return 0;
}

int cmd_unlinked(const std::string& path, bool as_json, std::ostream& out) {
    Diagram d = parse_diagram(slurp(path));
    InvariantReport rep = analyze(d);
    ConstituentScan scan = constituent_links(d);
    std::string verdict = scan.any_linked ? "linked" : "unlinked_consistent";
    if (as_json) {
        json entries = json::array();
        for (const auto& e : scan.entries)
            entries.push_back({{"classes", e.strand_classes},
                               {"r", e.r.to_string("L")},
                               {"unlink", e.unlink_value}});
        out << json{{"verdict", verdict},
                    {"r", rep.r.to_string("L")},
                    {"constituents", entries}}
                   .dump(2)
            << "\n";
    } else {
        out << "R = " << rep.r.to_string("L") << "\n";
        out << "constituents: " << scan.entries.size() << "\n";
        for (const auto& e : scan.entries) {
            out << "  [";
            for (size_t i = 0; i < e.strand_classes.size(); ++i)
                out << (i ? " " : "") << e.strand_classes[i];
            out << "] -> " << e.r.to_string("L")
                << (e.unlink_value ? "" : "  (nontrivial link)") << "\n";
        }
        out << "verdict: " << verdict << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"invariant calculator for link and embedded-graph diagrams"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string eval_path = "-", unlinked_path = "-", check_path = "-", corpus_dir;
    uint64_t seed = 1;
    int iters = 25;

    auto* eval = app.add_subcommand("eval", "evaluate a diagram's invariant");
    eval->add_option("file", eval_path, "diagram file, or - for stdin");
    eval->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "compare a corpus against expected values");
    table->add_option("--corpus", corpus_dir, "directory with *.dg files and expected.txt")
        ->required();
    table->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "randomized move and skein self-checks");
    check->add_option("file", check_path, "diagram file, or - for stdin");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--iters", iters, "number of random moves to apply");
    check->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* unl = app.add_subcommand("unlinked", "scan the constituent links of a graph");
    unl->add_option("file", unlinked_path, "diagram file, or - for stdin");
    unl->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool as_json = format == "json";
        if (eval->parsed()) return cmd_eval(eval_path, as_json, std::cout);
        if (table->parsed()) return cmd_table(corpus_dir, std::cout, as_json);
        if (check->parsed())
            return cmd_check(check_path, seed, iters, as_json, std::cout);
        if (unl->parsed()) return cmd_unlinked(unlinked_path, as_json, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rinv
