// padent: topological entropy and scale of endomorphisms of finite-rank
// locally compact abelian p-groups, by closed formula and by brute-force oracle.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "padent/errors.hpp"
#include "padent/report.hpp"

namespace {

using padent::io::Json;

struct Options {
    std::string file = "-";
    std::string format = "json";
    std::size_t window = padent::kDefaultWindow;
    std::size_t cap = padent::kDefaultCap;

    // newton
    std::string poly;
    // newton, heisenberg
    std::uint64_t p = 0;
    // heisenberg
    std::string ring = "qp";
    std::string s;
    std::string t;
    bool oracle = false;
    std::size_t sample = 8;
};

Json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in)
            throw padent::ParseError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw padent::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void add_common(CLI::App* sub, Options& opt, bool with_file) {
    if (with_file)
        sub->add_option("-f,--file", opt.file, "request JSON document ('-' for stdin)");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--window", opt.window, "stabilization window");
    sub->add_option("--cap", opt.cap, "maximal number of oracle steps");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact topological entropy and scale of endomorphisms of finite-rank LCA p-groups"};
    app.require_subcommand(1);
    Options opt;

    auto* entropy = app.add_subcommand("entropy", "entropy by formula (and oracle) for a matrix, group or periodic group");
    add_common(entropy, opt, true);
    auto* oracle = app.add_subcommand("oracle", "cotrajectory and Moeller oracles with full diagnostics");
    add_common(oracle, opt, true);
    auto* scale = app.add_subcommand("scale", "scale by formula, Moeller's limit and diagonal subgroup search");
    add_common(scale, opt, true);
    auto* check_at = app.add_subcommand("check-at", "check h(A) = h(A1) + h(A2) for A = [[A1, 0], [B, A2]]");
    add_common(check_at, opt, true);
    auto* classify = app.add_subcommand("classify", "E0 / E_<inf classification of a group");
    add_common(classify, opt, true);

    auto* newton = app.add_subcommand("newton", "Newton polygon and root valuations of a monic polynomial");
    add_common(newton, opt, false);
    newton->add_option("--poly", opt.poly, "monic polynomial, e.g. \"X^2-10/3X+1\"")->required();
    newton->add_option("--p", opt.p, "prime")->required();

    auto* heis = app.add_subcommand("heisenberg", "Heisenberg groups H(Z_p), H(Q_p)");
    add_common(heis, opt, false);
    heis->add_option("--ring", opt.ring, "zp or qp")->check(CLI::IsMember({"zp", "qp"}));
    heis->add_option("--p", opt.p, "prime")->required();
    heis->add_option("--s", opt.s, "diagonal parameter s (rational)");
    heis->add_option("--t", opt.t, "diagonal parameter t (rational)");
    heis->add_flag("--oracle", opt.oracle, "also run the cotrajectory oracle");
    heis->add_option("--sample", opt.sample, "number of sampled endomorphisms for the evidence report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return padent::kExitParse;
    }

    CLI::App* sub = app.get_subcommands().front();
    padent::ComputationRequest request;
    request.command = *padent::parse_command(sub->get_name());
    request.window = opt.window;
    request.cap = opt.cap;
    request.format = opt.format == "text" ? padent::OutputFormat::Text : padent::OutputFormat::Json;

    padent::Outcome outcome;
    try {
        switch (request.command) {
        case padent::Command::Newton:
            request.payload = Json{{"poly", opt.poly}, {"p", opt.p}};
            break;
        case padent::Command::Heisenberg:
            request.payload = Json{{"ring", opt.ring}, {"p", opt.p}, {"oracle", opt.oracle}, {"sample", opt.sample}};
            if (!opt.s.empty())
                request.payload["s"] = opt.s;
            if (!opt.t.empty())
                request.payload["t"] = opt.t;
            break;
        default:
            request.payload = read_document(opt.file);
        }
        outcome = padent::execute(request);
    } catch (const padent::ParseError& e) {
        outcome = {padent::kExitParse, Json{{"error", Json{{"kind", "parse"}, {"message", e.what()}}}}};
    }

    std::ostream& os = outcome.exit_code == padent::kExitOk ? std::cout : std::cerr;
    os << padent::render(outcome.report, request.format);
    return outcome.exit_code;
}
