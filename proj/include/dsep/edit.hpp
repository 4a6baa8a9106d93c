#ifndef DSEP_EDIT_HPP
#define DSEP_EDIT_HPP

#include "faces.hpp"
#include "rotation_system.hpp"

#include <array>
#include <optional>
#include <variant>

namespace dsep
{

/// Where a new neighbor goes in a rotation: right after an existing neighbor,
/// or at an absolute index (needed when the rotation is empty).
class Anchor
{
  public:
    Anchor() : value_(std::size_t{0}) {}

    static Anchor after(Vertex neighbor) noexcept {return Anchor(neighbor);}
    static Anchor at(std::size_t index) noexcept {return Anchor(index);}

    bool is_neighbor() const noexcept {return std::holds_alternative<Vertex>(value_);}
    Vertex neighbor() const {return std::get<Vertex>(value_);}
    std::size_t index() const {return std::get<std::size_t>(value_);}

    friend bool operator==(const Anchor&, const Anchor&) = default;

  private:
    explicit Anchor(Vertex v) : value_(v) {}
    explicit Anchor(std::size_t i) : value_(i) {}

    std::variant<Vertex, std::size_t> value_;
};

inline std::string to_string(const Anchor& a)
{
    return a.is_neighbor() ? "after " + std::to_string(a.neighbor()) : "at " + std::to_string(a.index());
}

/// Anchors that re-insert {u,v} exactly where it currently sits.
struct EdgeAnchors
{
    Anchor at_u;
    Anchor at_v;
};

inline EdgeAnchors anchors_of(const RotationSystem& rs, Vertex u, Vertex v)
{
    ensure(rs.has_edge(u, v), ErrorCode::NoSuchEdge, "no edge " + to_string(Edge::of(u, v)));
    auto anchor = [&](Vertex a, Vertex b) {
        if(rs.degree(a) == 1) {return Anchor::at(0);}
        return Anchor::after(rs.predecessor(a, b));
    };
    return EdgeAnchors{anchor(u, v), anchor(v, u)};
}

namespace detail
{

inline std::vector<Vertex> without(std::span<const Vertex> rot, Vertex x)
{
    std::vector<Vertex> out;
    out.reserve(rot.size());
    for(const Vertex w : rot) {if(w != x) {out.push_back(w);}}
    return out;
}

inline std::vector<Vertex> inserted(const RotationSystem& rs, Vertex u, const Anchor& anchor, Vertex v)
{
    const auto rot = rs.rotation(u);
    std::vector<Vertex> out(rot.begin(), rot.end());
    std::size_t where = 0;
    if(anchor.is_neighbor())
    {
        const std::size_t p = rs.position(u, anchor.neighbor());
        ensure(p != RotationSystem::npos, ErrorCode::BadAnchor,
               std::to_string(anchor.neighbor()) + " is not a neighbor of " + std::to_string(u));
        where = p + 1;
    }
    else
    {
        ensure(anchor.index() <= out.size(), ErrorCode::BadAnchor,
               "index " + std::to_string(anchor.index()) + " out of range at " + std::to_string(u));
        where = anchor.index();
    }
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(where), v);
    return out;
}

} // detail

/// Removes {u,v}; every other rotation entry keeps its place.
inline RotationSystem delete_edge(const RotationSystem& rs, Vertex u, Vertex v)
{
    ensure(rs.has_edge(u, v), ErrorCode::NoSuchEdge, "no edge " + to_string(Edge::of(u, v)));
    return rs.with_rotations({{u, detail::without(rs.rotation(u), v)},
                              {v, detail::without(rs.rotation(v), u)}});
}

/// Adds {u,v} with v placed at `after_u` in rotation(u) and u at `after_v` in
/// rotation(v).
inline RotationSystem insert_edge(const RotationSystem& rs, Vertex u, const Anchor& after_u,
                                  Vertex v, const Anchor& after_v)
{
    ensure(rs.has_vertex(u) && rs.has_vertex(v), ErrorCode::BadAnchor, "unknown endpoint");
    ensure(u != v, ErrorCode::SelfLoop, "loop at " + std::to_string(u));
    ensure(!rs.has_edge(u, v), ErrorCode::EdgeExists, "edge " + to_string(Edge::of(u, v)) + " already present");
    return rs.with_rotations({{u, detail::inserted(rs, u, after_u, v)},
                              {v, detail::inserted(rs, v, after_v, u)}});
}

using Triangle = std::array<Vertex, 3>;

/// Transposes the other two triangle vertices in the rotation of each corner.
/// The triangle must be a face in either orientation.
inline RotationSystem reverse_triangle(const RotationSystem& rs, const Triangle& t)
{
    const auto [a, b, c] = t;
    const bool edges = rs.has_edge(a, b) && rs.has_edge(b, c) && rs.has_edge(c, a);
    const auto describe = "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    ensure(edges, ErrorCode::NotAFace, describe + " is not a triangle of the graph");
    const FaceSet fs = trace_faces(rs);
    ensure(fs.find_face({a, b, c}) || fs.find_face({a, c, b}), ErrorCode::NotAFace,
           describe + " is not a face");

    auto swapped = [&](Vertex v, Vertex x, Vertex y) {
        const auto rot = rs.rotation(v);
        std::vector<Vertex> out(rot.begin(), rot.end());
        std::swap(out[rs.position(v, x)], out[rs.position(v, y)]);
        return out;
    };
    return rs.with_rotations({{a, swapped(a, b, c)}, {b, swapped(b, a, c)}, {c, swapped(c, a, b)}});
}

} // dsep
#endif // DSEP_EDIT_HPP
