#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idm/engine.hpp"
#include "idm/oracle.hpp"
#include "idm/script.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// All ranges of random instances against the oracle; returns the number of mismatches.
int fuzz(std::uint64_t seed, int instances, idm::Index max_n) {
    using namespace idm;
    int bad = 0;
    for (int k = 0; k < instances; ++k, ++seed) {
        const Index alphabet = std::vector<Index>{1, 2, 4, 26}[seed % 4];
        const Index n = 1 + static_cast<Index>(seed * 2654435761u % max_n);
        const auto inst = oracle::random_instance(seed, n, alphabet, static_cast<Index>(seed % 51));
        const TextContext ctx(inst.text);
        const StaticEngine engine(ctx, inst.fragments);
        const oracle::Dictionary odict(inst.text, inst.fragments);
        std::vector<Occurrence> occ;
        std::vector<Index> ids;
        for (Index i = 1; i <= n; ++i) {
            for (Index j = i; j <= n; ++j) {
                const auto want = oracle::answer(inst.text, odict, i, j);
                occ.clear();
                ids.clear();
                engine.report(i, j, occ);
                engine.report_distinct(i, j, ids);
                const auto est = engine.count_distinct_approx(i, j);
                const bool ok = engine.exists(i, j) == want.exists && occ == want.occurrences && ids == want.distinct &&
                                engine.count(i, j) == want.count && est.value >= want.distinct_count &&
                                est.value <= want.distinct_count * (est.contained_nodes + est.anchor_queries);
                if (!ok) {
                    std::cout << "mismatch seed=" << seed << " n=" << n << " range=[" << i << ".." << j << "]\n";
                    ++bad;
                }
            }
        }
    }
    std::cout << (bad ? "FAIL " : "ok ") << instances << " instances, " << bad << " mismatches\n";
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Internal dictionary matching over a text"};
    app.require_subcommand(1);

    std::string text_path, dict_path, script_path;
    bool dynamic = false, integers = false, bench = false;
    idm::Index epoch = 0;
    std::uint64_t seed = 1;
    auto* run = app.add_subcommand("run", "Build the indexes and execute a query script");
    run->add_option("--text", text_path, "Text file (raw bytes, or integers with --int-alphabet)")->required();
    run->add_option("--dict", dict_path, "Dictionary file, one 'start end' fragment per line")->required();
    run->add_option("--script", script_path, "Script file, one command per line")->required();
    run->add_flag("--dynamic", dynamic, "Allow INSERT / DELETE / REBUILD");
    run->add_flag("--int-alphabet", integers, "Text is whitespace-separated integers");
    run->add_option("--epoch", epoch, "Rebuild every m updates (default ceil(sqrt(n + d)))");
    run->add_flag("--bench", bench, "Append timing statistics");

    int instances = 20;
    idm::Index max_n = 60;
    auto* fz = app.add_subcommand("fuzz", "Compare all query kinds with the brute-force oracle");
    fz->add_option("--seed", seed, "First seed");
    fz->add_option("--instances", instances, "Number of random instances")->check(CLI::PositiveNumber);
    fz->add_option("--max-n", max_n, "Largest text length")->check(CLI::PositiveNumber);

    auto* dump = app.add_subcommand("dump-rslp", "Print the recompression grammar of a text");
    dump->add_option("--text", text_path, "Text file")->required();
    dump->add_flag("--int-alphabet", integers, "Text is whitespace-separated integers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const idm::Text text = idm::parse_text(read_file(text_path), integers);
            std::istringstream dict_in(read_file(dict_path)), script_in(read_file(script_path));
            const auto dictionary = idm::parse_dictionary(dict_in);
            const auto commands = idm::parse_script(script_in);
            idm::ScriptOptions options;
            options.dynamic = dynamic;
            options.epoch = epoch;
            options.bench = bench;
            options.bytes = !integers;
            idm::run_script(text, dictionary, commands, options, std::cout);
        } else if (*fz) {
            return fuzz(seed, instances, max_n) ? 1 : 0;
        } else if (*dump) {
            const idm::Text text = idm::parse_text(read_file(text_path), integers);
            if (text.size() == 0) throw std::runtime_error("empty text");
            std::cout << idm::Rslp(text).dump(!integers);
        }
    } catch (const std::exception& e) {
        std::cout.flush();
        std::cerr << "idm: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
