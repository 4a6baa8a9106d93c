#ifndef DSEP_DUAL_HPP
#define DSEP_DUAL_HPP

#include "faces.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace dsep
{

/// One dual edge per primal edge, joining the faces on its two sides.
struct DualEdge
{
    std::size_t face_a;
    std::size_t face_b;
    Edge primal;

    bool is_loop() const noexcept {return face_a == face_b;}
};

/// Dual multigraph of an embedding. Node i is face i of the traced FaceSet.
/// Loops and parallel edges are kept, each with its primal edge.
class DualGraph
{
  public:
    DualGraph() = default;
    DualGraph(std::vector<std::size_t> face_lengths, std::vector<DualEdge> edges)
        : lengths_(std::move(face_lengths)), edges_(std::move(edges)), incidence_(lengths_.size())
    {
        for(std::size_t e = 0; e < edges_.size(); ++e)
        {
            incidence_[edges_[e].face_a].push_back(e);
            if(!edges_[e].is_loop()) {incidence_[edges_[e].face_b].push_back(e);}
        }
    }

    std::size_t num_nodes() const noexcept {return lengths_.size();}
    std::size_t num_edges() const noexcept {return edges_.size();}
    std::size_t face_length(std::size_t f) const {return lengths_.at(f);}
    const std::vector<DualEdge>& edges() const noexcept {return edges_;}
    const DualEdge& edge(std::size_t e) const {return edges_.at(e);}
    const std::vector<std::size_t>& incident(std::size_t f) const {return incidence_.at(f);}

    std::size_t other_end(std::size_t e, std::size_t f) const
    {
        const DualEdge& d = edges_[e];
        return d.face_a == f ? d.face_b : d.face_a;
    }

    /// Connected components of the dual with `removed` nodes deleted. Each
    /// component is sorted; components are ordered by their smallest face.
    std::vector<std::vector<std::size_t>> components_without(const std::vector<std::size_t>& removed) const
    {
        std::vector<char> gone(num_nodes(), 0);
        for(const std::size_t r : removed) {gone.at(r) = 1;}
        std::vector<char> seen(num_nodes(), 0);
        std::vector<std::vector<std::size_t>> out;
        for(std::size_t s = 0; s < num_nodes(); ++s)
        {
            if(gone[s] || seen[s]) {continue;}
            std::vector<std::size_t> comp;
            std::vector<std::size_t> stack{s};
            seen[s] = 1;
            while(!stack.empty())
            {
                const std::size_t f = stack.back();
                stack.pop_back();
                comp.push_back(f);
                for(const std::size_t e : incidence_[f])
                {
                    const std::size_t g = other_end(e, f);
                    if(!gone[g] && !seen[g]) {seen[g] = 1; stack.push_back(g);}
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

  private:
    std::vector<std::size_t> lengths_;
    std::vector<DualEdge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

inline DualGraph build_dual(const FaceSet& fs)
{
    std::vector<std::size_t> lengths;
    lengths.reserve(fs.size());
    for(const Face& f : fs.faces()) {lengths.push_back(f.size());}

    std::vector<DualEdge> edges;
    for(std::size_t f = 0; f < fs.size(); ++f)
    {
        for(const Arc& a : fs.face(f))
        {
            if(a.tail > a.head) {continue;}
            const auto g = fs.face_of(a.reversed());
            ensure(g.has_value(), ErrorCode::NonIntegerGenus, "arc without reverse in face set");
            edges.push_back(DualEdge{f, *g, Edge{a.tail, a.head}});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const DualEdge& x, const DualEdge& y) {return x.primal < y.primal;});
    return DualGraph(std::move(lengths), std::move(edges));
}

struct SimplicityWitness
{
    enum class Kind {SelfLoop, MultiEdge};

    Kind kind;
    std::size_t face_a;
    std::size_t face_b;                 // equals face_a for a self-loop
    std::vector<Edge> primal_edges;     // the shared primal edges
};

struct SimplicityVerdict
{
    bool simple = true;
    std::optional<SimplicityWitness> witness;

    explicit operator bool() const noexcept {return simple;}
};

/// Simple iff no face meets itself along an edge and no two faces share two or
/// more edges. Reports the first offending face (pair) in index order.
inline SimplicityVerdict is_simple(const DualGraph& d)
{
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Edge>> shared;
    for(const DualEdge& e : d.edges())
    {
        shared[std::minmax(e.face_a, e.face_b)].push_back(e.primal);
    }
    for(auto& [faces, primal] : shared)
    {
        if(faces.first == faces.second)
        {
            return {false, SimplicityWitness{SimplicityWitness::Kind::SelfLoop, faces.first, faces.first, primal}};
        }
        if(primal.size() >= 2)
        {
            return {false, SimplicityWitness{SimplicityWitness::Kind::MultiEdge, faces.first, faces.second, primal}};
        }
    }
    return {};
}

/// Articulation nodes of the dual (iterative low-link DFS), ascending.
inline std::vector<std::size_t> find_cutfaces(const DualGraph& d)
{
    const std::size_t n = d.num_nodes();
    if(n == 0) {return {};}
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<char> cut(n, 0);

    struct Frame
    {
        std::size_t node;
        std::size_t via_edge;
        std::size_t next = 0;
        std::size_t children = 0;
    };
    std::size_t timer = 0;
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back(Frame{0, unvisited});
    while(!stack.empty())
    {
        Frame& fr = stack.back();
        const auto& inc = d.incident(fr.node);
        if(fr.next < inc.size())
        {
            const std::size_t e = inc[fr.next++];
            if(e == fr.via_edge) {continue;}
            const std::size_t g = d.other_end(e, fr.node);
            if(g == fr.node) {continue;}
            if(disc[g] == unvisited)
            {
                disc[g] = low[g] = timer++;
                ++fr.children;
                stack.push_back(Frame{g, e});
            }
            else
            {
                low[fr.node] = std::min(low[fr.node], disc[g]);
            }
            continue;
        }
        const Frame done = fr;
        stack.pop_back();
        if(stack.empty())
        {
            if(done.children >= 2) {cut[done.node] = 1;}
            break;
        }
        Frame& parent = stack.back();
        low[parent.node] = std::min(low[parent.node], low[done.node]);
        if(parent.via_edge != unvisited && low[done.node] >= disc[parent.node]) {cut[parent.node] = 1;}
    }
    for(std::size_t f = 0; f < n; ++f)
    {
        ensure(disc[f] != unvisited, ErrorCode::DisconnectedDual, "dual graph is not connected");
    }
    std::vector<std::size_t> out;
    for(std::size_t f = 0; f < n; ++f) {if(cut[f]) {out.push_back(f);}}
    return out;
}

struct SeparationCertificate
{
    std::size_t cutface = 0;
    std::vector<std::vector<std::size_t>> components;
    std::vector<FaceCensus> side_census;
};

inline SeparationCertificate separation(const DualGraph& d, std::size_t cutface)
{
    ensure(cutface < d.num_nodes(), ErrorCode::NotACutface, "no face " + std::to_string(cutface));
    SeparationCertificate cert;
    cert.cutface    = cutface;
    cert.components = d.components_without({cutface});
    ensure(cert.components.size() >= 2, ErrorCode::NotACutface,
           "removing face " + std::to_string(cutface) + " leaves the dual connected");
    for(const auto& comp : cert.components)
    {
        FaceCensus c;
        for(const std::size_t f : comp) {++c[d.face_length(f)];}
        cert.side_census.push_back(std::move(c));
    }
    return cert;
}

struct TwoCutResult
{
    bool is_cut = false;
    std::vector<std::vector<std::size_t>> components;

    explicit operator bool() const noexcept {return is_cut;}
};

/// Whether deleting both f1 and f2 disconnects the dual.
inline TwoCutResult find_2cuts_containing(const DualGraph& d, std::size_t f1, std::size_t f2)
{
    TwoCutResult r;
    r.components = d.components_without({f1, f2});
    r.is_cut     = r.components.size() >= 2;
    return r;
}

/// Primal vertices touched by a set of faces.
inline std::set<Vertex> vertices_on(const FaceSet& fs, const std::vector<std::size_t>& faces)
{
    std::set<Vertex> out;
    for(const std::size_t f : faces)
    {
        for(const Arc& a : fs.face(f)) {out.insert(a.tail);}
    }
    return out;
}

} // dsep
#endif // DSEP_DUAL_HPP
