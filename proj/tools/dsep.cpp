// dsep: command-line front end for the embedding workbench.
//
//   dsep verify  <file|corpus:NAME> [--expect-genus G] [--expect-cutface [LEN]] [--expect-simple-dual]
//   dsep derive  <current-graph> [-o out.rot]
//   dsep surgery <file|corpus:NAME> [-o out.rot] [--dump-steps [--dump-dir DIR]]
//   dsep bounds  <c> [<c_to>]
//   dsep corpus  list | show NAME
//
// Exit status: 0 ok, 1 a requested assertion or a surgery step failed,
// 2 unreadable or malformed input, bad arguments.

#include "dsep/certificate.hpp"
#include "dsep/corpus.hpp"
#include "dsep/current_graph.hpp"
#include "dsep/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

using namespace dsep;
using nlohmann::json;

constexpr int exit_ok     = 0;
constexpr int exit_failed = 1;
constexpr int exit_input  = 2;

bool is_input_error(ErrorCode c)
{
    switch(c)
    {
        case ErrorCode::ParseError:
        case ErrorCode::SymmetryViolation:
        case ErrorCode::DuplicateNeighbor:
        case ErrorCode::SelfLoop:
        case ErrorCode::Disconnected:
        case ErrorCode::NTooSmall:
        case ErrorCode::CTooSmall:
        case ErrorCode::Io:
            return true;
        default:
            return false;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    ensure(in.good(), ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    ensure(out.good(), ErrorCode::Io, "cannot write " + path);
    out << text;
}

/// `corpus:K11` or a path.
RotationSystem load_embedding(const std::string& what)
{
    constexpr std::string_view prefix = "corpus:";
    if(what.starts_with(prefix))
    {
        const auto entry = find_corpus(std::string_view(what).substr(prefix.size()));
        ensure(entry.has_value(), ErrorCode::Io, "no corpus entry " + what);
        return entry->load();
    }
    return parse_rotation_system(read_file(what));
}

json to_json(const Certificate& c)
{
    json j;
    j["input"]          = c.input;
    j["digest"]         = "fnv1a64:" + hex64(c.digest);
    j["vertices"]       = c.summary.num_vertices;
    j["edges"]          = c.summary.num_edges;
    j["faces"]          = c.summary.num_faces;
    j["genus"]          = c.summary.genus;
    j["complete_graph"] = c.complete;
    j["face_census"]    = json::object();
    for(const auto& [len, count] : c.summary.face_census) {j["face_census"][std::to_string(len)] = count;}
    j["face_excess"]  = c.summary.face_excess;
    j["dual_simple"]  = c.simplicity.simple;
    j["dual_witness"] = c.simplicity.witness ? json(to_string(*c.simplicity.witness)) : json(nullptr);
    j["cutfaces"]     = json::array();
    for(const auto& cf : c.cutfaces)
    {
        json blocks = json::array();
        for(const auto& b : cf.blocks)
        {
            json census = json::object();
            for(const auto& [len, count] : b.census) {census[std::to_string(len)] = count;}
            blocks.push_back({{"faces", b.faces}, {"census", census}, {"vertices", b.vertices}});
        }
        j["cutfaces"].push_back({{"face", cf.face}, {"length", cf.length}, {"blocks", blocks}});
    }
    j["gamma_complete"] = c.gamma ? json(*c.gamma) : json(nullptr);
    j["optimal_genus"]  = c.optimal_target ? json(*c.optimal_target) : json(nullptr);
    j["optimal"]        = c.complete ? json(c.optimal) : json(nullptr);
    if(!c.steps.empty())
    {
        j["steps"] = json::array();
        for(const auto& s : c.steps)
        {
            j["steps"].push_back({{"name", s.name}, {"dE", s.delta_edges}, {"dF", s.delta_faces},
                                  {"dg", s.delta_genus}, {"verdict", s.verdict}});
        }
    }
    return j;
}

void print(const Certificate& c, const std::string& format)
{
    if(format == "json") {std::cout << to_json(c).dump(2) << "\n";}
    else {std::cout << c.to_text();}
}

struct VerifyArgs
{
    std::string input;
    std::optional<std::size_t> expect_genus;
    std::vector<std::string> expect_cutface;   // empty, or [""] when given bare
    bool expect_simple = false;
};

int cmd_verify(const VerifyArgs& a, bool cutface_flag, const std::string& format)
{
    const Certificate cert = certify(load_embedding(a.input), a.input);
    print(cert, format);
    int status = exit_ok;
    auto check = [&](bool ok, const std::string& what) {
        std::cerr << (ok ? "ok: " : "FAILED: ") << what << "\n";
        if(!ok) {status = exit_failed;}
    };
    if(a.expect_genus)
    {
        check(cert.summary.genus == *a.expect_genus, "genus " + std::to_string(*a.expect_genus));
    }
    if(cutface_flag)
    {
        if(a.expect_cutface.empty() || a.expect_cutface.front().empty())
        {
            check(!cert.cutfaces.empty(), "has a cutface");
        }
        else
        {
            const std::size_t len = std::stoul(a.expect_cutface.front());
            check(cert.has_cutface_of_length(len), "cutface of length " + std::to_string(len));
        }
    }
    if(a.expect_simple) {check(cert.simplicity.simple, "simple dual");}
    return status;
}

int cmd_derive(const std::string& path, const std::string& out)
{
    const CurrentGraph cg = parse_current_graph(read_file(path));
    const ValidationReport report = validate(cg);
    std::cerr << report.to_text();
    if(!report.ok()) {return exit_failed;}
    const RotationSystem rs   = derive(cg);
    const EmbeddingSummary s  = summarize(rs);
    std::cerr << "derived: " << s.num_vertices << " vertices, " << s.num_edges << " edges, " << s.num_faces
              << " faces, genus " << s.genus << ", census " << to_string(s.face_census) << "\n";
    const std::string text = write_rotation_system(rs);
    if(out.empty()) {std::cout << text;}
    else {write_file(out, text);}
    return exit_ok;
}

int cmd_surgery(const std::string& input, const std::string& out, bool dump, const std::string& dump_dir,
                const std::string& format)
{
    const RotationSystem rs = load_embedding(input);
    const SurgeryReport report = run_surgery(rs);
    print(certify(report, input), format);
    if(dump)
    {
        std::filesystem::create_directories(dump_dir);
        for(std::size_t i = 0; i < report.stages.size(); ++i)
        {
            const auto file = std::filesystem::path(dump_dir)
                              / ("step" + std::to_string(i + 1) + "_" + report.steps[i].name + ".rot");
            write_file(file.string(), write_rotation_system(report.stages[i]));
            std::cerr << "wrote " << file.string() << "\n";
        }
    }
    if(!out.empty()) {write_file(out, write_rotation_system(report.result()));}
    return exit_ok;
}

int cmd_bounds(long long from, std::optional<long long> to)
{
    const long long last = to.value_or(from);
    ensure(from >= 8, ErrorCode::CTooSmall, "c = " + std::to_string(from) + " < 8");
    ensure(last >= from, ErrorCode::CTooSmall, "empty range");
    std::cout << "c\tgamma(K_c+1)\tdelta1>=\tdelta2>=\t18-gon\n";
    for(long long c = from; c <= last; ++c)
    {
        std::cout << c << '\t' << bounds::genus_complete(c + 1) << '\t' << bounds::delta1_lower(c) << '\t'
                  << bounds::delta2_lower(c) << '\t' << (bounds::feasible_18gon_residues(c) ? "yes" : "no")
                  << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rotation-system embedding workbench"};
    app.require_subcommand(1);
    std::string format = "line";

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "certify an embedding (file or corpus:NAME)");
    verify->add_option("input", va.input)->required();
    verify->add_option("--expect-genus", va.expect_genus);
    auto* cutface_opt = verify->add_option("--expect-cutface", va.expect_cutface, "require a cutface [of this length]")
                            ->expected(0, 1)
                            ->check(CLI::NonNegativeNumber | CLI::IsMember({""}));
    verify->add_flag("--expect-simple-dual", va.expect_simple);
    verify->add_option("--format", format)->check(CLI::IsMember({"line", "json"}));

    std::string cg_path, derive_out;
    auto* derive_cmd = app.add_subcommand("derive", "derived embedding of an index-3 current graph");
    derive_cmd->add_option("current_graph", cg_path)->required();
    derive_cmd->add_option("-o,--output", derive_out);

    std::string surgery_in, surgery_out, dump_dir = ".";
    bool dump = false;
    auto* surgery = app.add_subcommand("surgery", "subtractible-handle surgery on K_n - E(K_2)");
    surgery->add_option("input", surgery_in)->required();
    surgery->add_option("-o,--output", surgery_out);
    surgery->add_flag("--dump-steps", dump, "write the embedding after each step");
    surgery->add_option("--dump-dir", dump_dir);
    surgery->add_option("--format", format)->check(CLI::IsMember({"line", "json"}));

    long long c_from = 0;
    std::optional<long long> c_to;
    auto* bounds_cmd = app.add_subcommand("bounds", "lower-bound table for c .. c_to");
    bounds_cmd->add_option("c", c_from)->required();
    bounds_cmd->add_option("c_to", c_to);

    std::string show_name;
    auto* corpus_cmd = app.add_subcommand("corpus", "bundled optimal embeddings");
    corpus_cmd->require_subcommand(1);
    auto* corpus_list = corpus_cmd->add_subcommand("list");
    auto* corpus_show = corpus_cmd->add_subcommand("show");
    corpus_show->add_option("name", show_name)->required();

    try
    {
        app.parse(argc, argv);
    }
    catch(const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try
    {
        if(*verify) {return cmd_verify(va, cutface_opt->count() > 0, format);}
        if(*derive_cmd) {return cmd_derive(cg_path, derive_out);}
        if(*surgery) {return cmd_surgery(surgery_in, surgery_out, dump, dump_dir, format);}
        if(*bounds_cmd) {return cmd_bounds(c_from, c_to);}
        if(*corpus_list)
        {
            for(const auto& e : corpus)
            {
                std::cout << e.name << "\tgenus " << e.genus << "\tcutface " << e.cutface_length;
                if(!e.note.empty()) {std::cout << "\t+ " << e.note;}
                std::cout << "\n";
            }
            return exit_ok;
        }
        if(*corpus_show)
        {
            const auto e = find_corpus(show_name);
            ensure(e.has_value(), ErrorCode::Io, "no corpus entry " + show_name);
            std::cout << e->text;
            return exit_ok;
        }
    }
    catch(const Error& e)
    {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return is_input_error(e.code()) ? exit_input : exit_failed;
    }
    catch(const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_ok;
}
