#ifndef DSEP_CURRENT_GRAPH_HPP
#define DSEP_CURRENT_GRAPH_HPP

#include "faces.hpp"
#include "rotation_system.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dsep
{

using Current = std::int64_t;

/// The cyclic group Z_m with m = 12s + 3.
struct CurrentGroup
{
    Current modulus = 15;

    Current s() const noexcept {return (modulus - 3) / 12;}

    Current reduce(Current x) const noexcept
    {
        const Current r = x % modulus;
        return r < 0 ? r + modulus : r;
    }

    /// Whether x generates the subgroup {0, 3, 6, ...} of index 3.
    bool generates_index3_subgroup(Current x) const noexcept
    {
        return std::gcd(reduce(x), modulus) == 3;
    }
};

/// Cubic graph embedded by a rotation system, with a current on every arc
/// (current of the reverse arc is the negation) and lettered vortex vertices.
struct CurrentGraph
{
    CurrentGroup group;
    RotationSystem embedding;
    std::map<Vertex, char> labels;
    std::map<Arc, Current> currents;

    Current current(Arc a) const
    {
        const auto it = currents.find(a);
        ensure(it != currents.end(), ErrorCode::NoSuchEdge,
               "no arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
        return it->second;
    }

    bool is_labeled(Vertex v) const {return labels.count(v) != 0;}

    /// Sum of the currents on arcs directed into v.
    Current excess(Vertex v) const
    {
        Current sum = 0;
        for(const Vertex u : embedding.rotation(v)) {sum += current(Arc{u, v});}
        return group.reduce(sum);
    }
};

/// Reads the current-graph text format:
///
///     group <m>
///     vertex <id> [label <letter>]
///     rot <id>: <neighbor> <neighbor> <neighbor>
///     arc <u> <v> current <c>        (reverse arc implicitly carries -c)
///
/// with `#` comment lines.
inline CurrentGraph parse_current_graph(std::string_view text)
{
    CurrentGraph cg;
    bool have_group = false;
    std::set<Vertex> declared;
    std::map<Vertex, std::vector<Vertex>> rotations;
    std::vector<std::pair<Arc, Current>> arcs;

    detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        const std::string where = "line " + std::to_string(lineno);
        auto bad = [&](const std::string& what) {fail(ErrorCode::ParseError, where + ": " + what);};
        const auto tok = detail::split_ws(line);
        if(tok[0] == "group")
        {
            if(tok.size() != 2 || have_group) {bad("expected a single 'group <m>'");}
            if(!detail::parse_int(tok[1], cg.group.modulus)) {bad("bad modulus");}
            if(cg.group.modulus < 15 || cg.group.modulus % 12 != 3) {bad("modulus must be 12s+3 with s >= 1");}
            have_group = true;
        }
        else if(tok[0] == "vertex")
        {
            Vertex v = 0;
            if(tok.size() < 2 || !detail::parse_int(tok[1], v)) {bad("bad vertex id");}
            if(!declared.insert(v).second) {bad("vertex declared twice");}
            if(tok.size() == 4 && tok[2] == "label" && tok[3].size() == 1)
            {
                for(const auto& [w, letter] : cg.labels)
                {
                    if(letter == tok[3][0]) {bad("label reused");}
                }
                cg.labels.emplace(v, tok[3][0]);
            }
            else if(tok.size() != 2) {bad("expected 'vertex <id> [label <letter>]'");}
        }
        else if(tok[0] == "rot")
        {
            const auto colon = line.find(':');
            if(colon == std::string_view::npos) {bad("missing ':'");}
            Vertex v = 0;
            if(!detail::parse_int(detail::trim(line.substr(3, colon - 3)), v)) {bad("bad vertex id");}
            if(!declared.count(v)) {bad("rotation for undeclared vertex");}
            std::vector<Vertex> rot;
            for(const auto t : detail::split_ws(line.substr(colon + 1)))
            {
                Vertex u = 0;
                if(!detail::parse_int(t, u)) {bad("bad neighbor");}
                rot.push_back(u);
            }
            if(!rotations.emplace(v, std::move(rot)).second) {bad("rotation given twice");}
        }
        else if(tok[0] == "arc")
        {
            Arc a{};
            Current c = 0;
            if(tok.size() != 5 || tok[3] != "current" || !detail::parse_int(tok[1], a.tail)
               || !detail::parse_int(tok[2], a.head) || !detail::parse_int(tok[4], c))
            {
                bad("expected 'arc <u> <v> current <c>'");
            }
            arcs.emplace_back(a, c);
        }
        else
        {
            bad("unknown directive '" + std::string(tok[0]) + "'");
        }
    });

    ensure(have_group, ErrorCode::ParseError, "missing 'group' line");
    for(const Vertex v : declared)
    {
        ensure(rotations.count(v) != 0, ErrorCode::ParseError, "vertex " + std::to_string(v) + " has no rotation");
    }
    cg.embedding = RotationSystem::from_rotations(rotations);
    for(const auto& [a, c] : arcs)
    {
        ensure(cg.embedding.has_edge(a.tail, a.head), ErrorCode::ParseError,
               "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " is not an edge");
        const Current r = cg.group.reduce(c);
        ensure(r != 0, ErrorCode::ParseError, "zero current on " + to_string(Edge::of(a.tail, a.head)));
        ensure(cg.currents.emplace(a, r).second && cg.currents.emplace(a.reversed(), cg.group.reduce(-r)).second,
               ErrorCode::ParseError, "edge " + to_string(Edge::of(a.tail, a.head)) + " given twice");
    }
    for(const Edge& e : cg.embedding.edges())
    {
        ensure(cg.currents.count(Arc{e.u, e.v}) != 0, ErrorCode::ParseError,
               "edge " + to_string(e) + " has no current");
    }
    return cg;
}

/// Circuits [0], [1], [2] and their logs (currents read along each walk).
struct CircuitSet
{
    std::array<std::vector<Arc>, 3> circuits;
    std::array<std::vector<Current>, 3> logs;
};

namespace detail
{

/// Circuit label per traced face: face 0 (through the first arc of the lowest
/// vertex) is [0]; the others follow from current = label(e-) - label(e+) mod 3.
/// Empty if the residues are inconsistent or do not give three distinct labels.
inline std::optional<std::array<int, 3>> circuit_labels(const CurrentGraph& cg, const FaceSet& fs)
{
    if(fs.size() != 3) {return std::nullopt;}
    std::array<int, 3> label{0, -1, -1};
    for(int pass = 0; pass < 3; ++pass)
    {
        for(std::size_t f = 0; f < 3; ++f)
        {
            if(label[f] < 0) {continue;}
            for(const Arc& a : fs.face(f))
            {
                const std::size_t g = *fs.face_of(a.reversed());
                const int want = static_cast<int>((label[f] + cg.current(a)) % 3);
                if(label[g] < 0) {label[g] = want;}
                else if(label[g] != want) {return std::nullopt;}
            }
        }
    }
    std::array<int, 3> sorted = label;
    std::sort(sorted.begin(), sorted.end());
    if(sorted != std::array<int, 3>{0, 1, 2}) {return std::nullopt;}
    return label;
}

} // detail

/// Traces the current graph's faces with the kernel rule and labels them.
/// Throws CircuitCount unless there are exactly three.
inline CircuitSet trace_circuits(const CurrentGraph& cg)
{
    const FaceSet fs = trace_faces(cg.embedding);
    ensure(fs.size() == 3, ErrorCode::CircuitCount,
           "embedding has " + std::to_string(fs.size()) + " circuits, expected 3");
    const auto labels = detail::circuit_labels(cg, fs).value_or(std::array<int, 3>{0, 1, 2});
    CircuitSet out;
    for(std::size_t f = 0; f < 3; ++f)
    {
        const auto k = static_cast<std::size_t>(labels[f]);
        out.circuits[k] = fs.face(f);
        for(const Arc& a : fs.face(f)) {out.logs[k].push_back(cg.current(a));}
    }
    return out;
}

struct Violation
{
    enum class Property
    {
        Degree = 1,
        CircuitCount = 2,
        LogCompleteness = 3,
        Kirchhoff = 4,
        Vortex = 5,
        EdgeResidue = 6,
    };

    Property property;
    std::string detail;
};

constexpr std::string_view to_string(Violation::Property p) noexcept
{
    switch(p)
    {
        case Violation::Property::Degree:          return "every vertex has degree 3";
        case Violation::Property::CircuitCount:    return "exactly three circuits";
        case Violation::Property::LogCompleteness: return "each log contains every nonzero element once";
        case Violation::Property::Kirchhoff:       return "Kirchhoff's current law at unlabeled vertices";
        case Violation::Property::Vortex:          return "labeled vertices meet all circuits with index-3 excess";
        case Violation::Property::EdgeResidue:     return "edge currents match circuit labels mod 3";
    }
    return "unknown";
}

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept {return violations.empty();}

    bool has(Violation::Property p) const noexcept
    {
        for(const auto& v : violations) {if(v.property == p) {return true;}}
        return false;
    }

    std::string to_text() const
    {
        if(ok()) {return "current graph: valid\n";}
        std::string out;
        for(const auto& v : violations)
        {
            out += "violation (" + std::to_string(static_cast<int>(v.property)) + ") "
                 + std::string(to_string(v.property)) + ": " + v.detail + "\n";
        }
        return out;
    }
};

/// Checks the six index-3 properties in order and reports every violation.
inline ValidationReport validate(const CurrentGraph& cg)
{
    using P = Violation::Property;
    ValidationReport report;
    auto add = [&](P p, std::string what) {report.violations.push_back(Violation{p, std::move(what)});};
    const RotationSystem& g = cg.embedding;
    const CurrentGroup& grp = cg.group;

    bool cubic = true;
    for(const Vertex v : g.vertices())
    {
        if(g.degree(v) != 3)
        {
            cubic = false;
            add(P::Degree, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        }
    }

    const FaceSet fs = trace_faces(g);
    if(fs.size() != 3)
    {
        add(P::CircuitCount, "embedding has " + std::to_string(fs.size()) + " circuits");
    }
    else
    {
        std::array<int, 3> name{0, 1, 2};
        if(const auto labels = detail::circuit_labels(cg, fs)) {name = *labels;}
        for(std::size_t f = 0; f < 3; ++f)
        {
            std::vector<int> hits(static_cast<std::size_t>(grp.modulus), 0);
            for(const Arc& a : fs.face(f)) {++hits[static_cast<std::size_t>(cg.current(a))];}
            std::string missing, repeated;
            for(Current x = 1; x < grp.modulus; ++x)
            {
                const int h = hits[static_cast<std::size_t>(x)];
                if(h == 0) {missing += " " + std::to_string(x);}
                if(h > 1) {repeated += " " + std::to_string(x);}
            }
            if(!missing.empty() || !repeated.empty())
            {
                add(P::LogCompleteness, "log of circuit [" + std::to_string(name[f]) + "]"
                    + (missing.empty() ? "" : " misses" + missing)
                    + (repeated.empty() ? "" : " repeats" + repeated));
            }
        }
    }

    for(const Vertex v : g.vertices())
    {
        const Current ex = cg.excess(v);
        if(!cg.is_labeled(v))
        {
            if(ex != 0) {add(P::Kirchhoff, "vertex " + std::to_string(v) + " has excess " + std::to_string(ex));}
            continue;
        }
        const std::string who = "labeled vertex " + std::to_string(v) + " (" + std::string(1, cg.labels.at(v)) + ")";
        if(!grp.generates_index3_subgroup(ex))
        {
            add(P::Vortex, who + " has excess " + std::to_string(ex) + ", which does not generate the index-3 subgroup");
        }
        if(fs.size() == 3 && cubic)
        {
            std::set<std::size_t> met;
            for(const Vertex u : g.rotation(v)) {met.insert(*fs.face_of(Arc{u, v}));}
            if(met.size() != 3) {add(P::Vortex, who + " is met by " + std::to_string(met.size()) + " circuits");}
        }
    }

    if(fs.size() == 3)
    {
        const auto labels = detail::circuit_labels(cg, fs);
        if(!labels)
        {
            add(P::EdgeResidue, "no labeling of the circuits satisfies current = label(e-) - label(e+) mod 3");
        }
    }
    return report;
}

namespace detail
{

inline std::string validation_summary(const ValidationReport& r)
{
    std::string out;
    for(const auto& v : r.violations)
    {
        if(!out.empty()) {out += "; ";}
        out += "(" + std::to_string(static_cast<int>(v.property)) + ") " + v.detail;
    }
    return out;
}

} // detail

/// New vertex ids for labeled vertices: m, m+1, ... in letter order.
inline std::map<Vertex, Vertex> vortex_ids(const CurrentGraph& cg)
{
    std::vector<std::pair<char, Vertex>> by_letter;
    for(const auto& [v, letter] : cg.labels) {by_letter.emplace_back(letter, v);}
    std::sort(by_letter.begin(), by_letter.end());
    std::map<Vertex, Vertex> out;
    auto next = static_cast<Vertex>(cg.group.modulus);
    for(const auto& [letter, v] : by_letter) {out.emplace(v, next++);}
    return out;
}

/// The derived embedding: vertex j of Z_m gets the log of circuit [j mod 3]
/// shifted by j, then each labeled vertex's Hamiltonian face is subdivided by a
/// new vertex. For valid input the result is a triangular embedding of
/// K_{m+l} - E(K_l).
inline RotationSystem derive(const CurrentGraph& cg)
{
    const ValidationReport report = validate(cg);
    ensure(report.ok(), ErrorCode::InvalidCurrentGraph, detail::validation_summary(report));

    const CircuitSet cs = trace_circuits(cg);
    const Current m = cg.group.modulus;
    std::map<Vertex, std::vector<Vertex>> rot;
    for(Current j = 0; j < m; ++j)
    {
        auto& r = rot[static_cast<Vertex>(j)];
        for(const Current a : cs.logs[static_cast<std::size_t>(j % 3)])
        {
            r.push_back(static_cast<Vertex>(cg.group.reduce(j + a)));
        }
    }
    const RotationSystem base = RotationSystem::from_rotations(rot);
    const FaceSet fs = trace_faces(base);

    for(const auto& [vortex, new_id] : vortex_ids(cg))
    {
        // The corner of circuit [k] at the vortex: arc in, then arc out.
        std::optional<std::size_t> face;
        for(std::size_t k = 0; k < 3 && !face; ++k)
        {
            const auto& walk = cs.circuits[k];
            for(std::size_t i = 0; i < walk.size(); ++i)
            {
                if(walk[i].head != vortex) {continue;}
                const auto j = static_cast<Vertex>(k);
                const auto from = static_cast<Vertex>(cg.group.reduce(static_cast<Current>(k) + cg.current(walk[i])));
                face = fs.face_of(Arc{from, j});
                break;
            }
        }
        ensure(face.has_value(), ErrorCode::HamiltonianFaceMissing,
               "vortex " + std::to_string(vortex) + " lies on no circuit");
        const auto cycle = fs.vertices_of(*face);
        const std::set<Vertex> distinct(cycle.begin(), cycle.end());
        ensure(cycle.size() == static_cast<std::size_t>(m) && distinct.size() == cycle.size(),
               ErrorCode::HamiltonianFaceMissing,
               "vortex " + std::to_string(vortex) + " induces a face of length " + std::to_string(cycle.size()));

        const Face& walk = fs.face(*face);
        for(std::size_t i = 0; i < walk.size(); ++i)
        {
            const Arc in = walk[(i + walk.size() - 1) % walk.size()];
            auto& r = rot[walk[i].tail];
            const auto at = std::find(r.begin(), r.end(), in.tail);
            r.insert(at + 1, new_id);
        }
        rot[new_id] = std::vector<Vertex>(cycle.rbegin(), cycle.rend());
    }
    return RotationSystem::from_rotations(rot);
}

} // dsep
#endif // DSEP_CURRENT_GRAPH_HPP
