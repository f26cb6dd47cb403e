#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "vfree/bench.hpp"
#include "vfree/folding.hpp"
#include "vfree/matrix.hpp"
#include "vfree/text.hpp"

namespace vfree::cli {

namespace {

struct Inputs {
    std::string spec_path;
    std::string preset;
    std::string subgroup;
    std::string subgroup_file;
    std::string word;
    std::string other;
    std::string other_file;
    std::string target;
    std::string gens;
    std::string dot_path;
    bool verbose = false;
    std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
    std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const Preset* find_preset(const std::string& name) {
    if (name == "sl2z") return &sl2z_preset();
    if (name == "gl2z") return &gl2z_preset();
    return nullptr;
}

GraphOfGroups load_gog(const Inputs& in) {
    if (!in.spec_path.empty()) return load_spec(in.spec_path);
    if (const Preset* p = find_preset(in.preset.empty() ? "sl2z" : in.preset)) return p->gog;
    throw ParseError("unknown preset '" + in.preset + "'");
}

std::vector<Word> subgroup_words(const GraphOfGroups& gog, const std::string& inline_text,
                                 const std::string& file) {
    if (!file.empty()) return parse_word_lines(gog.alphabet(), read_file(file));
    return parse_word_list(gog.alphabet(), inline_text);
}

std::vector<Mat2> parse_matrix_list(const std::string& text) {
    std::vector<Mat2> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t semi = text.find(';', start);
        std::string piece = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (piece.find_first_not_of(" \t\n") != std::string::npos) out.push_back(parse_matrix(piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

void write_dot_to(const std::string& path, const FoldedSubgroup& fs, std::ostream& out) {
    if (path.empty() || path == "-") {
        write_dot(out, fs);
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParseError("cannot write '" + path + "'");
    write_dot(file, fs);
}

void add_gog_flags(CLI::App* cmd, Inputs& in) {
    auto* spec = cmd->add_option("--spec", in.spec_path, "graph-of-groups spec file (JSON)");
    auto* preset = cmd->add_option("--preset", in.preset, "built-in preset")->check(CLI::IsMember({"sl2z", "gl2z"}));
    spec->excludes(preset);
}

void add_subgroup_flags(CLI::App* cmd, Inputs& in) {
    auto* inline_words = cmd->add_option("--subgroup", in.subgroup, "generators, separated by ';'");
    auto* file = cmd->add_option("--subgroup-file", in.subgroup_file, "generators, one per line");
    inline_words->excludes(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Inputs in;
    CLI::App app{"Subgroup membership in fundamental groups of graphs of finite groups", "vffold"};
    app.require_subcommand(1);
    app.add_flag("--verbose,-v", in.verbose, "print extra detail");

    auto* fold_cmd = app.add_subcommand("fold", "build the folded subgroup graph and write it as DOT");
    add_gog_flags(fold_cmd, in);
    add_subgroup_flags(fold_cmd, in);
    fold_cmd->add_option("--dot", in.dot_path, "output path ('-' or omitted: stdout)");

    auto* member_cmd = app.add_subcommand("member", "test whether --word lies in the subgroup");
    add_gog_flags(member_cmd, in);
    add_subgroup_flags(member_cmd, in);
    member_cmd->add_option("--word", in.word, "A-loop at the base vertex")->required();
    member_cmd->add_option("--dot", in.dot_path, "also write the folded graph");

    auto* reduce_cmd = app.add_subcommand("reduce", "print a reduced form of --word");
    add_gog_flags(reduce_cmd, in);
    reduce_cmd->add_option("--word", in.word, "A-loop at the base vertex")->required();

    auto* free_cmd = app.add_subcommand("free", "test whether the subgroup is free");
    add_gog_flags(free_cmd, in);
    add_subgroup_flags(free_cmd, in);

    auto* equal_cmd = app.add_subcommand("equal", "test whether two subgroups are equal");
    add_gog_flags(equal_cmd, in);
    add_subgroup_flags(equal_cmd, in);
    auto* other = equal_cmd->add_option("--other", in.other, "second subgroup, separated by ';'");
    auto* other_file = equal_cmd->add_option("--other-file", in.other_file, "second subgroup, one per line");
    other->excludes(other_file);

    auto* mat_cmd = app.add_subcommand("matmember", "test whether --target lies in the group generated by --gens");
    mat_cmd->add_option("--preset", in.preset, "sl2z or gl2z")->check(CLI::IsMember({"sl2z", "gl2z"}));
    mat_cmd->add_option("--target", in.target, "[[a,b],[c,d]]")->required();
    mat_cmd->add_option("--gens", in.gens, "matrices separated by ';'");

    auto* bench_cmd = app.add_subcommand("bench", "time subgroup graph construction on random inputs");
    add_gog_flags(bench_cmd, in);
    bench_cmd->add_option("--sizes", in.sizes, "total input sizes in symbols")->delimiter(',');
    bench_cmd->add_option("--seed", in.seed, "workload seed");

    auto* spec_cmd = app.add_subcommand("spec", "print the graph of groups in the JSON spec format");
    add_gog_flags(spec_cmd, in);

    for (auto* cmd : app.get_subcommands({})) cmd->add_flag("--verbose,-v", in.verbose, "print extra detail");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "vffold: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        return usage;
    }

    try {
        if (fold_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            BuildStats stats;
            FoldedSubgroup fs = build_subgroup_graph(gog, subgroup_words(gog, in.subgroup, in.subgroup_file), {}, &stats);
            write_dot_to(in.dot_path, fs, out);
            if (in.verbose)
                err << "input symbols " << stats.input_symbols << ", saturated edges " << stats.saturated_edges
                    << ", folds " << stats.fold.removed_edges << ", folded vertices " << fs.vertex_count()
                    << ", folded edges " << fs.edge_count() << "\n";
            return ok;
        }
        if (member_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            std::vector<Word> words = subgroup_words(gog, in.subgroup, in.subgroup_file);
            Word w = parse_word(gog.alphabet(), in.word);
            LoopCheck check = is_aloop(gog, w);
            if (!check) throw NotALoop(0, check.position, check.reason);
            Word reduced = reduce_word(gog, w);
            if (reduced != w) {
                err << "note: word reduced before the membership test";
                if (in.verbose) err << ": " << format_word(gog.alphabet(), reduced);
                err << "\n";
            }
            FoldedSubgroup fs = build_subgroup_graph(gog, words);
            if (!in.dot_path.empty()) write_dot_to(in.dot_path, fs, err);
            out << boolean(member(fs, reduced)) << "\n";
            return ok;
        }
        if (reduce_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            Word w = parse_word(gog.alphabet(), in.word);
            Word reduced = reduce_word(gog, w);
            out << format_word(gog.alphabet(), reduced) << "\n";
            if (in.verbose)
                err << "length " << w.size() << " -> " << reduced.size() << ", syllables "
                    << syllable_length(gog.alphabet(), w) << " -> " << syllable_length(gog.alphabet(), reduced) << "\n";
            return ok;
        }
        if (free_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            FoldedSubgroup fs = build_subgroup_graph(gog, subgroup_words(gog, in.subgroup, in.subgroup_file));
            out << boolean(is_free_subgroup(fs)) << "\n";
            return ok;
        }
        if (equal_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            std::vector<Word> first = subgroup_words(gog, in.subgroup, in.subgroup_file);
            std::vector<Word> second = subgroup_words(gog, in.other, in.other_file);
            out << boolean(subgroups_equal(gog, first, second)) << "\n";
            return ok;
        }
        if (mat_cmd->parsed()) {
            const Preset* preset = find_preset(in.preset.empty() ? "sl2z" : in.preset);
            Mat2 target = parse_matrix(in.target);
            std::vector<Mat2> gens = parse_matrix_list(in.gens);
            if (in.verbose)
                err << "target word length " << matrix_to_word(*preset, target).size() << "\n";
            out << boolean(matrix_member(*preset, target, gens)) << "\n";
            return ok;
        }
        if (bench_cmd->parsed()) {
            GraphOfGroups gog = load_gog(in);
            BenchOptions options;
            options.sizes = in.sizes;
            options.seed = in.seed;
            std::vector<BenchRow> rows = run_bench(gog, options);
            out << std::setw(10) << "n" << std::setw(14) << "seconds" << std::setw(8) << "log*n" << std::setw(16)
                << "t/(n log*n)" << std::setw(10) << "growth" << std::setw(12) << "vertices" << "\n";
            bool near_linear = true;
            for (const BenchRow& r : rows) {
                out << std::setw(10) << r.n << std::setw(14) << std::setprecision(6) << std::fixed << r.seconds
                    << std::setw(8) << log_star(static_cast<double>(r.n)) << std::setw(16) << std::scientific
                    << std::setprecision(3) << r.per_symbol << std::setw(10) << std::fixed << std::setprecision(2)
                    << r.growth << std::setw(12) << r.folded_vertices << "\n";
                if (r.growth > 15) near_linear = false;
            }
            out << "near-linear (each tenfold step <= 15x): " << boolean(near_linear) << "\n";
            return ok;
        }
        if (spec_cmd->parsed()) {
            out << serialize_spec(load_gog(in));
            return ok;
        }
    } catch (const NotALoop& e) {
        err << "vffold: " << e.what() << "\n";
        return not_a_loop;
    } catch (const InvariantBreach& e) {
        err << "vffold: internal error: " << e.what() << "\n";
        return internal;
    } catch (const ConflictingAssignment& e) {
        err << "vffold: internal error: " << e.what() << "\n";
        return internal;
    } catch (const Error& e) {
        err << "vffold: " << e.what() << "\n";
        return bad_input;
    }
    return usage;
}

}  // namespace vfree::cli
