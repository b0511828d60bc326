#include "flagein/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace flagein;

namespace {

const char* kAliasHelp = R"(Space aliases:
  F4-I  E7-I  E8(i)-I  E8(ii)-I  E8:node=3-I
  E6-IIa  E7-IIa  B:l=5-IIa  D:l=4-IIa
  C:l=6,p=2-IIb  D:l=8,p=3-IIb
  E6:nodes=1,4  B5:nodes=1,2   (explicit painted nodes)
Nodes use the numbering of the diagrams in the README.)";

void emit(const std::string& body, const std::string& out)
{
    if (out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << body;
}

std::string format_doc(const Json& doc, const std::string& fmt, const Json& rows)
{
    if (fmt == "json") return doc.dump(2) + "\n";
    if (fmt == "csv") return render_csv(rows);
    return render_text(doc);
}

Json classify_rows(const Json& doc)
{
    Json rows = Json::array();
    for (const char* key : {"spaces", "degenerate", "rejected"})
        for (auto r : doc[key]) {
            r["status"] = key;
            rows.push_back(r);
        }
    return rows;
}

Json analyze_rows(const Json& doc)
{
    Json rows = Json::array();
    const auto& sols = doc["einstein"]["solutions"];
    const auto& recs = doc["isometry"]["records"];
    for (std::size_t i = 0; i < sols.size(); ++i) {
        Json r;
        r["index"] = i;
        for (std::size_t k = 0; k < sols[i]["metric"].size(); ++k) r["x" + std::to_string(k + 1)] = sols[i]["metric"][k];
        r["einstein_constant"] = sols[i]["einstein_constant"];
        r["residual"] = sols[i]["residual"];
        r["kind"] = sols[i]["kind"];
        r["ordering"] = sols[i].value("ordering", -1);
        r["S"] = recs[i]["S"];
        r["H"] = recs[i]["H"];
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariant Einstein metrics on flag manifolds with four isotropy summands"};
    app.footer(kAliasHelp);
    app.require_subcommand(1);

    std::string format = "text", out;
    int max_rank = 10, starts = 2000;
    std::uint64_t seed = 1;
    std::string space;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out, "Output file (reproduce: directory)");
    };
    auto add_solver = [&](CLI::App* sub) {
        sub->add_option("--starts", starts, "Newton starts (at least 1000)");
        sub->add_option("--seed", seed, "Seed for the start points");
    };

    auto* classify = app.add_subcommand("classify", "List the four-summand flag manifolds");
    classify->add_option("--max-rank", max_rank, "Largest classical rank")->check(CLI::Range(4, 64));
    add_common(classify);

    auto* analyze = app.add_subcommand("analyze", "Full report for one space");
    analyze->add_option("--space", space, "Space alias (see below)")->required();
    add_common(analyze);
    add_solver(analyze);

    auto* reproduce = app.add_subcommand("reproduce", "Recompute the reference tables; exit code 2 on mismatch");
    add_common(reproduce);
    add_solver(reproduce);

    CLI11_PARSE(app, argc, argv);

    try {
        SolverOptions opt;
        opt.starts = starts;
        opt.seed = seed;
        if (*classify) {
            Json doc = classification_report(max_rank);
            emit(format_doc(doc, format, classify_rows(doc)), out);
            return 0;
        }
        if (*analyze) {
            Json doc = analyze_report(parse_space(space), opt);
            emit(format_doc(doc, format, analyze_rows(doc)), out);
            return 0;
        }
        const std::string dir = out.empty() ? "reproduction" : out;
        std::filesystem::create_directories(dir);
        const std::string ext = format == "json" ? ".json" : format == "csv" ? ".csv" : ".txt";
        bool all = true;
        for (const auto& f : reproduce_all(opt)) {
            std::ofstream file(std::filesystem::path(dir) / (f.name + ext));
            file << format_doc(f.document, format, f.document["rows"]);
            std::cout << (f.pass ? "ok      " : "MISMATCH") << "  " << f.name << "\n";
            all = all && f.pass;
        }
        return all ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
