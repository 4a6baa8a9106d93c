#ifndef DSEP_FACES_HPP
#define DSEP_FACES_HPP

#include "rotation_system.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dsep
{

using Face = std::vector<Arc>;

/// Boundary walks of an embedding. Every arc lies on exactly one walk.
class FaceSet
{
  public:
    FaceSet() = default;
    explicit FaceSet(std::vector<Face> faces) : faces_(std::move(faces))
    {
        for(std::size_t f = 0; f < faces_.size(); ++f)
        {
            for(const Arc& a : faces_[f]) {arc_face_.emplace_back(a, f);}
        }
        std::sort(arc_face_.begin(), arc_face_.end());
    }

    const std::vector<Face>& faces() const noexcept {return faces_;}
    const Face& face(std::size_t f) const {return faces_.at(f);}
    std::size_t size() const noexcept {return faces_.size();}
    std::size_t length(std::size_t f) const {return faces_.at(f).size();}

    std::optional<std::size_t> face_of(Arc a) const
    {
        const auto it = std::lower_bound(arc_face_.begin(), arc_face_.end(), std::make_pair(a, std::size_t{0}));
        if(it == arc_face_.end() || it->first != a) {return std::nullopt;}
        return it->second;
    }

    /// Corner vertices of face f in walk order (the tail of each arc).
    std::vector<Vertex> vertices_of(std::size_t f) const
    {
        std::vector<Vertex> out;
        out.reserve(faces_.at(f).size());
        for(const Arc& a : faces_[f]) {out.push_back(a.tail);}
        return out;
    }

    /// Index of the face whose walk is the cyclic vertex sequence `cycle`, if any.
    std::optional<std::size_t> find_face(const std::vector<Vertex>& cycle) const
    {
        if(cycle.size() < 2) {return std::nullopt;}
        const auto f = face_of(Arc{cycle[0], cycle[1]});
        if(!f || faces_[*f].size() != cycle.size()) {return std::nullopt;}
        const Face& walk = faces_[*f];
        std::size_t start = 0;
        while(walk[start] != Arc{cycle[0], cycle[1]}) {++start;}
        for(std::size_t k = 0; k < cycle.size(); ++k)
        {
            if(walk[(start + k) % walk.size()].tail != cycle[k]) {return std::nullopt;}
        }
        return f;
    }

  private:
    std::vector<Face> faces_;
    std::vector<std::pair<Arc, std::size_t>> arc_face_;
};

/// Traces faces with the fixed rule: the successor of arc (u,v) is (v,w), where
/// w follows u in rotation(v). Walks start at the lowest unvisited arc in
/// (vertex, rotation position) order, so the result is deterministic.
inline FaceSet trace_faces(const RotationSystem& rs)
{
    const std::size_t n = rs.num_vertices();
    std::vector<std::size_t> offset(n + 1, 0);
    for(std::size_t i = 0; i < n; ++i) {offset[i + 1] = offset[i] + rs.rotation_at(i).size();}

    std::vector<char> seen(offset[n], 0);
    std::vector<Face> faces;
    if(n == 1 && offset[n] == 0)
    {
        faces.emplace_back();
        return FaceSet(std::move(faces));
    }
    for(std::size_t i = 0; i < n; ++i)
    {
        for(std::size_t p = 0; p < rs.rotation_at(i).size(); ++p)
        {
            if(seen[offset[i] + p]) {continue;}
            Face walk;
            std::size_t vi = i, vp = p;
            while(!seen[offset[vi] + vp])
            {
                seen[offset[vi] + vp] = 1;
                const Vertex tail = rs.vertices()[vi];
                const Vertex head = rs.rotation_at(vi)[vp];
                walk.push_back(Arc{tail, head});
                const std::size_t hi = rs.index_of(head);
                const std::size_t back = rs.position_at(hi, tail);
                vi = hi;
                vp = (back + 1) % rs.rotation_at(hi).size();
            }
            faces.push_back(std::move(walk));
        }
    }
    return FaceSet(std::move(faces));
}

/// Face-length multiset, length -> count.
using FaceCensus = std::map<std::size_t, std::size_t>;

inline std::string to_string(const FaceCensus& census)
{
    std::string out;
    for(const auto& [len, count] : census)
    {
        if(!out.empty()) {out += ' ';}
        out += std::to_string(len) + "^" + std::to_string(count);
    }
    return out;
}

struct EmbeddingSummary
{
    std::size_t num_vertices = 0;
    std::size_t num_edges    = 0;
    std::size_t num_faces    = 0;
    std::size_t genus        = 0;
    FaceCensus face_census;
    std::int64_t face_excess = 0;

    /// |V| - (c+1) for an assumed connectivity c.
    std::int64_t vertex_excess_for(std::int64_t c) const noexcept
    {
        return static_cast<std::int64_t>(num_vertices) - (c + 1);
    }

    bool triangular() const noexcept
    {
        return face_census.size() == 1 && face_census.begin()->first == 3;
    }

    std::size_t count_of_length(std::size_t len) const
    {
        const auto it = face_census.find(len);
        return it == face_census.end() ? 0 : it->second;
    }

    friend bool operator==(const EmbeddingSummary&, const EmbeddingSummary&) = default;
};

inline EmbeddingSummary summarize(const RotationSystem& rs, const FaceSet& fs)
{
    ensure(rs.connected(), ErrorCode::Disconnected, "genus is undefined for a disconnected graph");
    EmbeddingSummary s;
    s.num_vertices = rs.num_vertices();
    s.num_edges    = rs.num_edges();
    s.num_faces    = fs.size();
    std::size_t arcs = 0;
    for(const Face& f : fs.faces())
    {
        ++s.face_census[f.size()];
        arcs += f.size();
    }
    ensure(arcs == 2 * s.num_edges, ErrorCode::NonIntegerGenus, "face set does not cover every arc once");

    const auto chi = static_cast<std::int64_t>(s.num_vertices) - static_cast<std::int64_t>(s.num_edges)
                   + static_cast<std::int64_t>(s.num_faces);
    ensure(chi <= 2 && (2 - chi) % 2 == 0, ErrorCode::NonIntegerGenus,
           "V - E + F = " + std::to_string(chi));
    s.genus = static_cast<std::size_t>((2 - chi) / 2);
    // Sum of (len - 3). Negative only for graphs with fewer than three vertices.
    if(s.num_edges > 0)
    {
        s.face_excess = 2 * static_cast<std::int64_t>(s.num_edges) - 3 * static_cast<std::int64_t>(s.num_faces);
    }
    return s;
}

inline EmbeddingSummary summarize(const RotationSystem& rs)
{
    return summarize(rs, trace_faces(rs));
}

} // dsep
#endif // DSEP_FACES_HPP
