#ifndef DSEP_CERTIFICATE_HPP
#define DSEP_CERTIFICATE_HPP

#include "bounds.hpp"
#include "dual.hpp"
#include "surgery.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Verification certificates. Everything in here is recomputed from the
// rotation system; the line format (`key: value`, one per line, fixed key
// order) is what scripts should diff.

namespace dsep
{

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for(const unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct BlockRecord
{
    std::vector<std::size_t> faces;
    FaceCensus census;
    std::set<Vertex> vertices;
};

struct CutfaceRecord
{
    std::size_t face   = 0;
    std::size_t length = 0;
    std::vector<BlockRecord> blocks;
};

struct Certificate
{
    std::string input;
    std::uint64_t digest = 0;   // of the canonical text, so layout does not matter
    EmbeddingSummary summary;
    bool complete = false;
    SimplicityVerdict simplicity;
    std::vector<CutfaceRecord> cutfaces;
    std::optional<std::int64_t> gamma;            // gamma(K_n), complete graphs only
    std::optional<std::int64_t> optimal_target;   // gamma(K_n) + 2
    bool optimal = false;
    std::vector<StepRecord> steps;

    bool has_cutface_of_length(std::size_t len) const
    {
        for(const auto& c : cutfaces) {if(c.length == len) {return true;}}
        return false;
    }

    std::vector<std::pair<std::string, std::string>> lines() const;
    std::string to_text() const;
};

inline std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

inline std::string join_ids(const auto& range, char sep = ',')
{
    std::string out;
    for(const auto& x : range)
    {
        if(!out.empty()) {out += sep;}
        out += std::to_string(x);
    }
    return out.empty() ? "-" : out;
}

inline std::string to_string(const SimplicityWitness& w)
{
    std::string edges;
    for(const Edge& e : w.primal_edges)
    {
        if(!edges.empty()) {edges += ',';}
        edges += to_string(e);
    }
    if(w.kind == SimplicityWitness::Kind::SelfLoop)
    {
        return "self-loop face " + std::to_string(w.face_a) + " edges " + edges;
    }
    return "multi-edge faces " + std::to_string(w.face_a) + " " + std::to_string(w.face_b) + " edges " + edges;
}

inline std::vector<std::pair<std::string, std::string>> Certificate::lines() const
{
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&](std::string k, std::string v) {out.emplace_back(std::move(k), std::move(v));};
    auto yes = [](bool b) {return std::string(b ? "yes" : "no");};

    add("input", input);
    add("digest", "fnv1a64:" + hex64(digest));
    add("vertices", std::to_string(summary.num_vertices));
    add("edges", std::to_string(summary.num_edges));
    add("faces", std::to_string(summary.num_faces));
    add("genus", std::to_string(summary.genus));
    add("complete_graph", yes(complete));
    add("face_census", to_string(summary.face_census));
    add("face_excess", std::to_string(summary.face_excess));
    add("dual_simple", yes(simplicity.simple));
    add("dual_witness", simplicity.witness ? to_string(*simplicity.witness) : "none");
    add("cutfaces", std::to_string(cutfaces.size()));
    for(std::size_t i = 0; i < cutfaces.size(); ++i)
    {
        const auto& c = cutfaces[i];
        const std::string key = "cutface." + std::to_string(i);
        std::vector<std::size_t> sizes;
        for(const auto& b : c.blocks) {sizes.push_back(b.faces.size());}
        add(key, "face " + std::to_string(c.face) + " length " + std::to_string(c.length) + " blocks "
                     + join_ids(sizes));
        for(std::size_t j = 0; j < c.blocks.size(); ++j)
        {
            const auto& b = c.blocks[j];
            add(key + ".block." + std::to_string(j), std::to_string(b.faces.size()) + " faces, census "
                                                         + to_string(b.census) + ", vertices "
                                                         + join_ids(b.vertices));
        }
    }
    add("gamma_complete", gamma ? std::to_string(*gamma) : "n/a");
    add("optimal_genus", optimal_target ? std::to_string(*optimal_target) : "n/a");
    add("optimal", complete ? yes(optimal) : "n/a");
    for(std::size_t i = 0; i < steps.size(); ++i)
    {
        const auto& s = steps[i];
        auto sig = [](std::int64_t v) {return (v > 0 ? "+" : "") + std::to_string(v);};
        add("step." + std::to_string(i + 1), s.name + " dE=" + sig(s.delta_edges) + " dF=" + sig(s.delta_faces)
                                                 + " dg=" + sig(s.delta_genus) + " " + s.verdict);
    }
    return out;
}

inline std::string Certificate::to_text() const
{
    std::string out;
    for(const auto& [k, v] : lines()) {out += k + ": " + v + "\n";}
    return out;
}

/// Full verification pipeline: trace, summarize, dual, simplicity, cutfaces,
/// separation, optimality against gamma(K_n) + 2.
inline Certificate certify(const RotationSystem& rs, std::string input_name)
{
    Certificate cert;
    cert.input  = std::move(input_name);
    cert.digest = fnv1a(write_rotation_system(rs));

    const FaceSet fs   = trace_faces(rs);
    cert.summary       = summarize(rs, fs);
    const std::size_t n = cert.summary.num_vertices;
    cert.complete      = n >= 3 && cert.summary.num_edges == n * (n - 1) / 2;

    const DualGraph d = build_dual(fs);
    cert.simplicity   = is_simple(d);
    for(const std::size_t f : find_cutfaces(d))
    {
        const SeparationCertificate sep = separation(d, f);
        CutfaceRecord rec{f, fs.length(f), {}};
        for(std::size_t i = 0; i < sep.components.size(); ++i)
        {
            rec.blocks.push_back(BlockRecord{sep.components[i], sep.side_census[i], vertices_on(fs, sep.components[i])});
        }
        cert.cutfaces.push_back(std::move(rec));
    }

    if(cert.complete)
    {
        cert.gamma          = bounds::genus_complete(static_cast<bounds::Int>(n));
        cert.optimal_target = *cert.gamma + 2;
        cert.optimal = cert.simplicity.simple && !cert.cutfaces.empty()
                       && static_cast<std::int64_t>(cert.summary.genus) == *cert.optimal_target;
    }
    return cert;
}

/// Certificate of the final surgery embedding plus its step table.
inline Certificate certify(const SurgeryReport& report, std::string input_name)
{
    Certificate cert = certify(report.result(), std::move(input_name));
    cert.steps       = report.steps;
    return cert;
}

} // dsep
#endif // DSEP_CERTIFICATE_HPP
