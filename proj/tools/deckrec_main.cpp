#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deckrec/generators.hpp"
#include "deckrec/graph6.hpp"
#include "deckrec/oracle.hpp"
#include "deckrec/reconstruct.hpp"

namespace {

using namespace deckrec;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return 1;
        case ErrorKind::ParseError:
            return 2;
        case ErrorKind::Unrecognized:
        case ErrorKind::Mu1Unsupported:
            return 3;
        case ErrorKind::OutOfOracleRange:
            return 5;
        default: // the inconsistency family
            return 4;
    }
}

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

Graph graph_from_stdin() {
    std::string text = read_stdin();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) return parse_graph6(line);
    fail(ErrorKind::ParseError, "expected a graph6 line on stdin");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot open output file " + path);
    out << text;
}

Graph generate_named(const std::string& name, const std::vector<long long>& args) {
    const auto want = [&](std::size_t count) {
        if (args.size() != count)
            fail(ErrorKind::InvalidArgument,
                 "generator " + name + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (name == "petersen") {
        want(0);
        return petersen();
    }
    if (name == "cycle") {
        want(1);
        return cycle(int(args[0]));
    }
    if (name == "path") {
        want(1);
        return path(int(args[0]));
    }
    if (name == "complete") {
        want(1);
        return complete(int(args[0]));
    }
    if (name == "hypercube") {
        want(1);
        return hypercube(int(args[0]));
    }
    if (name == "rook") {
        want(2);
        return rook(int(args[0]), int(args[1]));
    }
    if (name == "paley") {
        want(1);
        return paley(int(args[0]));
    }
    if (name == "subdivided-star") {
        want(0);
        return subdivided_star();
    }
    if (name == "complete-multipartite") {
        if (args.empty())
            fail(ErrorKind::InvalidArgument, "complete-multipartite needs part sizes");
        std::vector<int> parts;
        for (long long a : args) parts.push_back(int(a));
        return complete_multipartite(parts);
    }
    fail(ErrorKind::InvalidArgument, "unknown generator " + name);
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Complete:
            return "complete";
        case Branch::CliqueUnion:
            return "clique-union";
        case Branch::Srg:
            return "srg";
        case Branch::Wdr:
            return "wdr";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deck computation and deck-based reconstruction of small graphs"};
    app.require_subcommand(1);

    int workers = 0;
    std::string output;
    app.add_option("--workers", workers, "worker threads (0 = all hardware threads)");
    app.add_option("--output", output, "write results to this file instead of stdout");

    auto* cmd_generate = app.add_subcommand("generate", "emit a named graph as graph6");
    std::string gen_name;
    std::vector<long long> gen_args;
    cmd_generate->add_option("name", gen_name, "generator name")->required();
    cmd_generate->add_option("params", gen_args, "generator parameters");

    auto* cmd_deck = app.add_subcommand("deck", "compute the k-deck of a graph6 graph on stdin");
    int deck_k = 0;
    cmd_deck->add_option("-k", deck_k, "card size")->required();

    auto* cmd_recognize =
        app.add_subcommand("recognize", "classify an (n-2)-deck read from stdin");

    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "rebuild the graph from an (n-2)-deck on stdin");

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive checks for n <= 7");
    cmd_oracle->require_subcommand(1);

    auto* cmd_preimages =
        cmd_oracle->add_subcommand("preimages", "list graphs whose deck equals the one on stdin");
    int cap = 10;
    cmd_preimages->add_option("--cap", cap, "stop after this many preimages");

    auto* cmd_certify = cmd_oracle->add_subcommand(
        "certify", "check l-reconstructibility of every recognizable class on n vertices");
    int certify_n = 0, certify_l = 2;
    bool certify_srg = false, certify_wdr = false;
    cmd_certify->add_option("-n", certify_n, "vertex count")->required();
    cmd_certify->add_option("-l", certify_l, "number of omitted vertices");
    cmd_certify->add_flag("--srg", certify_srg, "certify strongly regular classes");
    cmd_certify->add_flag("--wdr", certify_wdr, "certify connected weakly distance-regular classes with mu' >= 2");

    auto* cmd_collide =
        cmd_oracle->add_subcommand("collide", "list k-deck collision groups on n vertices");
    int collide_n = 0, collide_k = 0;
    cmd_collide->add_option("-n", collide_n, "vertex count")->required();
    cmd_collide->add_option("-k", collide_k, "card size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        std::string out;

        if (cmd_generate->parsed()) {
            if (gen_name == "collision-pair") {
                if (gen_args.size() != 1)
                    fail(ErrorKind::InvalidArgument, "collision-pair takes one parameter");
                const auto [a, b] = collision_pair(int(gen_args[0]));
                out = to_graph6(a) + "\n" + to_graph6(b) + "\n";
            } else {
                out = to_graph6(generate_named(gen_name, gen_args)) + "\n";
            }
        } else if (cmd_deck->parsed()) {
            const Graph g = graph_from_stdin();
            out = format_deck(compute_deck(g, deck_k, workers));
        } else if (cmd_recognize->parsed()) {
            const Deck deck = parse_deck(read_stdin());
            const int n = deck.n();
            if (is_complete(n, deck)) {
                out = "complete\n";
            } else if (const auto parts = recognize_clique_union(n, deck)) {
                out = "clique-union";
                for (int p : *parts) out += " " + std::to_string(p);
                out += "\n";
            } else if (const auto srg = recognize_srg(n, deck)) {
                out = "srg " + std::to_string(srg->k) + " " + std::to_string(srg->lambda) + " " +
                      std::to_string(srg->mu) + "\n";
            } else if (const auto wdr = recognize_wdr(n, deck)) {
                out = "wdr " + std::to_string(wdr->k) + " " + std::to_string(wdr->lambda) + " " +
                      std::to_string(wdr->mu_prime) + "\n";
            } else {
                fail(ErrorKind::Unrecognized, "deck matches no supported family");
            }
        } else if (cmd_reconstruct->parsed()) {
            const Deck deck = parse_deck(read_stdin());
            const auto [g, report] = reconstruct_from_deck(deck.n(), deck, workers);
            out = canonical_form(g).bytes + "\n";
            out += "branch " + std::string(branch_name(report.branch)) + "\n";
            out += std::string("verified ") + (report.verified ? "true" : "false") + "\n";
        } else if (cmd_preimages->parsed()) {
            const Deck deck = parse_deck(read_stdin());
            const PreimageResult r = find_deck_preimages(deck.n(), deck, cap, workers);
            for (const CanonicalCode& code : r.preimages) out += code.bytes + "\n";
            out += "count " + std::to_string(r.preimages.size()) +
                   (r.truncated ? " truncated" : "") + "\n";
        } else if (cmd_certify->parsed()) {
            if (certify_srg == certify_wdr)
                fail(ErrorKind::InvalidArgument, "choose exactly one of --srg / --wdr");
            long long checked = 0, good = 0;
            for (const Graph& g : enumerate_graphs(certify_n, workers)) {
                std::string line;
                if (certify_srg) {
                    const auto p = srg_params(g);
                    if (!p) continue;
                    line = canonical_form(g).bytes + " srg " + std::to_string(p->k) + " " +
                           std::to_string(p->lambda) + " " + std::to_string(p->mu);
                } else {
                    const auto p = wdr_params(g);
                    if (!p || p->mu_prime < 2 || !is_connected(g)) continue;
                    line = canonical_form(g).bytes + " wdr " + std::to_string(p->k) + " " +
                           std::to_string(p->lambda) + " " + std::to_string(p->mu_prime);
                }
                const bool ok = is_l_reconstructible(g, certify_l, workers);
                ++checked;
                if (ok) ++good;
                out += line + (ok ? " reconstructible" : " NOT-reconstructible") + "\n";
            }
            out += "certified " + std::to_string(good) + "/" + std::to_string(checked) + "\n";
        } else if (cmd_collide->parsed()) {
            const auto groups = find_collisions(collide_n, collide_k, workers);
            for (const auto& group : groups) {
                std::string line;
                for (const CanonicalCode& code : group)
                    line += (line.empty() ? "" : " ") + code.bytes;
                out += line + "\n";
            }
            out += "groups " + std::to_string(groups.size()) + "\n";
        }

        write_output(output, out);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
