#include "sqzero/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sqzero/conjecture.hpp"
#include "sqzero/error.hpp"
#include "sqzero/poset.hpp"
#include "sqzero/rank_profile.hpp"
#include "sqzero/serialize.hpp"

namespace sqz::cli {

namespace {

enum class Format { Text, Json, Dot };

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    int n = 8;
    int l = 0;
    std::string moves = "iii";
    std::string out_path;
    std::string sigma;
    std::string golden;
    std::string file;
    std::string mode = "sample";
    std::size_t samples = 200;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> boundary;
    bool dual_classes = false;
};

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "dot")
        return Format::Dot;
    throw InputError("unknown format '" + s + "'");
}

/// Text and JSON only; dot is reserved for poset export.
Format text_or_json(const Options& o) {
    const Format f = parse_format(o.format);
    if (f == Format::Dot)
        throw InputError("--format dot applies only to 'rp poset'");
    return f;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string join(const std::vector<Involution>& list, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i)
            s += sep;
        s += list[i].to_string();
    }
    return s;
}

int cmd_enum(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const auto all = enumerate_rp(o.n);
    if (f == Format::Json) {
        out << dump({{"n", o.n}, {"count", all.size()}, {"involutions", to_json(all)}});
    } else {
        for (const Involution& s : all)
            out << s.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_poset(const Options& o, std::ostream& out) {
    const Format f = parse_format(o.format);
    const PosetDag dag = build_order(o.n, parse_move_set(o.moves));
    const std::string body = export_hasse(dag, f == Format::Json ? HasseFormat::Json : HasseFormat::Dot);
    if (o.out_path.empty()) {
        out << body;
        return kExitOk;
    }
    std::ofstream file(o.out_path);
    if (!file)
        throw InputError("cannot write '" + o.out_path + "'");
    file << body;
    out << "wrote " << o.out_path << ": " << dag.size() << " nodes, " << dag.covers().size() << " covers, "
        << dag.level_count() << " levels\n";
    return kExitOk;
}

int cmd_maximal(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const PosetDag dag = build_order(o.n, parse_move_set(o.moves));
    const auto maxima = maximal_elements(dag);
    std::optional<std::vector<std::vector<Involution>>> classes;
    if (o.dual_classes)
        classes = duality_classes(maxima);
    if (f == Format::Json) {
        json j = {{"n", o.n}, {"moves", o.moves}, {"count", maxima.size()}, {"maximal", to_json(maxima)}};
        if (classes) {
            json cl = json::array();
            for (const auto& c : *classes)
                cl.push_back(to_json(c));
            j["classes"] = cl;
            j["class_count"] = classes->size();
        }
        out << dump(j);
        return kExitOk;
    }
    out << maxima.size() << " maximal\n";
    for (const Involution& s : maxima)
        out << s.to_string() << "\n";
    if (classes) {
        out << classes->size() << " classes\n";
        for (const auto& c : *classes)
            out << "{" << join(c, " ") << "}\n";
    }
    return kExitOk;
}

int cmd_levels(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const PosetDag dag = build_order(o.n, parse_move_set(o.moves));
    const auto levels = level_sets(dag);
    if (f == Format::Json) {
        json sizes = json::array();
        json sets = json::array();
        for (const auto& lv : levels) {
            sizes.push_back(lv.size());
            sets.push_back(to_json(lv));
        }
        out << dump({{"n", o.n}, {"moves", o.moves}, {"sizes", sizes}, {"levels", sets}});
        return kExitOk;
    }
    for (std::size_t k = 0; k < levels.size(); ++k)
        out << "L" << k + 1 << " (" << levels[k].size() << "): " << join(levels[k], " ") << "\n";
    return kExitOk;
}

int cmd_ancestor(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const Involution sigma = Involution::parse(o.sigma, o.n);
    const PosetDag dag = build_order(o.n, {MoveKind::III});
    const auto ancestors = maximal_ancestors(dag).at(sigma);
    if (ancestors.size() != 1) {
        const std::string msg = sigma.to_string() + " lies below " + std::to_string(ancestors.size()) +
                                " maximal elements: " + join(ancestors, " ");
        if (f == Format::Json)
            out << dump({{"sigma", sigma.to_string()}, {"unique", false}, {"ancestors", to_json(ancestors)}});
        else
            out << msg << "\n";
        return kExitViolation;
    }

    // Climb one level at a time through covers.
    std::vector<std::size_t> path{dag.index_of(sigma)};
    while (dag.level(path.back()) > 1) {
        const std::size_t v = path.back();
        std::size_t next = dag.parents(v).front();
        for (std::size_t u : dag.parents(v))
            if (dag.level(u) == dag.level(v) - 1) {
                next = u;
                break;
            }
        path.push_back(next);
    }
    if (f == Format::Json) {
        json steps = json::array();
        for (std::size_t v : path)
            steps.push_back({{"sigma", dag.nodes()[v].to_string()}, {"level", dag.level(v)}});
        out << dump({{"sigma", sigma.to_string()}, {"unique", true}, {"ancestor", ancestors.front().to_string()},
                     {"path", steps}});
    } else {
        out << ancestors.front().to_string() << "\n";
    }
    return kExitOk;
}

int cmd_type(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const Involution sigma = Involution::parse(o.sigma);
    const BlockType t = block_type(sigma);
    const BoundaryCounts b = boundary_counts(sigma);
    if (f == Format::Json) {
        out << dump({{"sigma", sigma.to_string()},
                     {"type", t.parts()},
                     {"l", t.l()},
                     {"C", b.leading_zero_cols},
                     {"R", b.trailing_zero_rows},
                     {"bounds_ok", t.satisfies_part_bounds() && sigma.n_points() >= 2 * t.l()}});
    } else {
        out << t.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const Involution sigma = Involution::parse(o.sigma, o.n);
    const Involution d = anti_diagonal_dual(sigma);
    if (f == Format::Json)
        out << dump({{"sigma", sigma.to_string()}, {"dual", d.to_string()}});
    else
        out << d.to_string() << "\n";
    return kExitOk;
}

int cmd_verify_figure(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const GoldenHasse golden = golden_from_json(read_json_file(o.golden));
    const PosetDag dag = build_order(8, {MoveKind::III});
    const GoldenComparison c = compare_with_golden(dag, golden);
    if (f == Format::Json) {
        out << dump(to_json(c));
    } else {
        out << "levels: " << (c.levels_match ? "match" : "MISMATCH") << "\n";
        for (const auto& d : c.level_diffs)
            out << "  " << d << "\n";
        out << "maximal: " << (c.maximal_match ? "match" : "MISMATCH") << "\n";
        out << "unique maximal ancestor: " << (c.ancestors_unique ? "total" : "VIOLATED") << "\n";
        out << "edges: " << c.golden_edges << " drawn, " << c.computed_covers << " covers, " << c.golden_only.size()
            << " drawn but not covers (" << c.golden_not_related.size() << " unrelated), " << c.computed_only.size()
            << " covers not drawn\n";
        for (const auto& [a, b] : c.golden_not_related)
            out << "  unrelated: " << a.to_string() << " -> " << b.to_string() << "\n";
        out << (c.hard_pass() ? "VERIFIED" : "FAILED") << "\n";
    }
    return c.hard_pass() ? kExitOk : kExitViolation;
}

void print_report_text(const Verification& v, std::ostream& out) {
    const ConditionReport& r = v.report;
    for (std::size_t i = 0; i < r.conditions.size(); ++i) {
        const ConditionResult& c = r.conditions[i];
        out << "c" << i + 1 << " " << to_string(c.verdict);
        if (c.verdict == Verdict::ExhaustivePass || c.verdict == Verdict::SampledPass)
            out << " (" << c.points_checked << " points)";
        if (!c.witness.empty())
            out << ": " << c.witness;
        out << "\n";
    }
    out << "C=" << r.boundary.leading_zero_cols << " R=" << r.boundary.trailing_zero_rows << "\n";
    out << "d=";
    if (r.degrees) {
        out << "(";
        for (std::size_t i = 0; i < r.degrees->size(); ++i)
            out << (i ? "," : "") << (*r.degrees)[i];
        out << ")\n";
    } else {
        out << "none\n";
    }
    if (v.flags)
        out << "type " << v.flags->type.to_string() << " l=" << v.flags->l << "\n";
    const InequalityResult& q = r.inequality;
    out << "inequality " << q.lhs.get_str() << " >= " << q.rhs.get_str() << (q.holds ? " holds" : " fails") << "\n";
    if (r.user_inequality)
        out << "inequality at given C, R: " << r.user_inequality->lhs.get_str()
            << " >= " << r.user_inequality->rhs.get_str() << (r.user_inequality->holds ? " holds" : " fails") << "\n";
    out << "classification " << to_string(r.classification) << "\n";
}

int cmd_check(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    MatrixFile mf = matrix_file_from_json(read_json_file(o.file));
    ConjectureInstance inst(std::move(mf.matrix), std::move(mf.degrees));
    if (!o.boundary.empty()) {
        if (o.boundary.size() != 2)
            throw InputError("--boundary takes C,R");
        inst.set_boundary(o.boundary[0], o.boundary[1]);
    }
    CheckMode mode;
    if (o.mode == "exhaustive")
        mode = CheckMode::exhaustive();
    else if (o.mode == "sample")
        mode = CheckMode::sample(o.samples, o.seed);
    else
        throw InputError("unknown mode '" + o.mode + "'");
    const Verification v = verify_instance(inst, mode);
    if (f == Format::Json)
        out << dump(to_json(v, inst));
    else
        print_report_text(v, out);
    return v.report.classification == Classification::Consistent ? kExitOk : kExitViolation;
}

int cmd_orbit_rep(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const MatrixFile mf = matrix_file_from_json(read_json_file(o.file));
    if (!mf.matrix.field().is_prime())
        throw InputError("orbit-rep needs a matrix over a prime field");
    const PrimeField field = mf.matrix.field().prime_field();
    const PartialPermutationMatrix rep = orbit_representative(constant_mod_matrix(mf.matrix), field);
    std::string pairs;
    for (auto [i, j] : rep.ones())
        pairs += (pairs.empty() ? "" : ",") + std::to_string(i) + "-" + std::to_string(j);
    if (f == Format::Json) {
        json j = to_json(rep);
        j["rank"] = rep.rank();
        j["pairs"] = pairs;
        out << dump(j);
    } else {
        out << (pairs.empty() ? "0" : pairs) << "\n";
    }
    return kExitOk;
}

int cmd_minor(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const MatrixFile mf = matrix_file_from_json(read_json_file(o.file));
    const Poly m = minor(mf.matrix, o.rows, o.cols);
    if (f == Format::Json)
        out << dump({{"rows", o.rows}, {"cols", o.cols}, {"minor", m.to_string()}});
    else
        out << m.to_string() << "\n";
    return kExitOk;
}

int cmd_compositions(const Options& o, std::ostream& out) {
    const Format f = text_or_json(o);
    const auto all = compositions_with_bounds(o.n, o.l);
    if (f == Format::Json) {
        json list = json::array();
        for (const BlockType& t : all)
            list.push_back(t.parts());
        out << dump({{"n", o.n}, {"l", o.l}, {"compositions", list}});
    } else {
        for (const BlockType& t : all)
            out << t.to_string() << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Borel orbits of square-zero matrices and the rank-8 conjecture checker", "sqzero"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", o.seed, "seed for sampled rank checks");

    int (*action)(const Options&, std::ostream&) = nullptr;
    auto verb = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };

    CLI::App* rp = app.add_subcommand("rp", "fixed-point-free involutions");
    rp->require_subcommand(1, 1);
    auto* s = verb(rp, "enum", "list RP(N)", cmd_enum);
    s->add_option("--n", o.n)->required();
    s = verb(rp, "poset", "Hasse diagram of the move order", cmd_poset);
    s->add_option("--n", o.n)->required();
    s->add_option("--moves", o.moves, "iii or iii+v");
    s->add_option("--out", o.out_path);
    s = verb(rp, "maximal", "maximal elements", cmd_maximal);
    s->add_option("--n", o.n)->required();
    s->add_option("--moves", o.moves);
    s->add_flag("--dual-classes", o.dual_classes);
    s = verb(rp, "levels", "level sets of the type-III order", cmd_levels);
    s->add_option("--n", o.n)->required();
    s->add_option("--moves", o.moves);
    s = verb(rp, "ancestor", "unique maximal element above sigma", cmd_ancestor);
    s->add_option("--n", o.n)->required();
    s->add_option("--sigma", o.sigma)->required();
    s = verb(rp, "type", "block type of sigma", cmd_type);
    s->add_option("--sigma", o.sigma)->required();
    s = verb(rp, "dual", "anti-diagonal dual of sigma", cmd_dual);
    s->add_option("--n", o.n)->required();
    s->add_option("--sigma", o.sigma)->required();
    s = verb(rp, "verify-figure1", "compare the N=8 type-III diagram with a transcription", cmd_verify_figure);
    s->add_option("--golden", o.golden)->required();

    CLI::App* mat = app.add_subcommand("mat", "polynomial matrices");
    mat->require_subcommand(1, 1);
    s = verb(mat, "check", "six-condition report", cmd_check);
    s->add_option("--file", o.file)->required();
    s->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sample"}));
    s->add_option("--samples", o.samples);
    s->add_option("--boundary", o.boundary, "C,R for condition 6")->delimiter(',');
    s = verb(mat, "orbit-rep", "partial permutation in the Borel orbit", cmd_orbit_rep);
    s->add_option("--file", o.file)->required();
    s = verb(mat, "minor", "determinant of a submatrix", cmd_minor);
    s->add_option("--file", o.file)->required();
    s->add_option("--rows", o.rows)->required()->delimiter(',');
    s->add_option("--cols", o.cols)->required()->delimiter(',');

    CLI::App* flags = app.add_subcommand("flags", "free-flag types");
    flags->require_subcommand(1, 1);
    s = verb(flags, "compositions", "compositions with part bounds", cmd_compositions);
    s->add_option("--n", o.n)->required();
    s->add_option("--l", o.l)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.find('\n'));
        err << "error: " << msg << "\n";
        return kExitInputError;
    }

    try {
        return action(o, out);
    } catch (const AncestorViolation& e) {
        err << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.find('\n'));
        err << "error: " << msg << "\n";
        return kExitInputError;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace sqz::cli
