#ifndef DSEP_ROTATION_SYSTEM_HPP
#define DSEP_ROTATION_SYSTEM_HPP

#include "error.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsep
{

using Vertex = std::uint32_t;

/// A directed copy of an edge. Every edge {u,v} carries the two arcs (u,v) and (v,u).
struct Arc
{
    Vertex tail;
    Vertex head;

    Arc reversed() const noexcept {return Arc{head, tail};}

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge
{
    Vertex u;
    Vertex v;

    static Edge of(Vertex a, Vertex b) noexcept {return a < b ? Edge{a, b} : Edge{b, a};}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Orientable cellular embedding of a simple graph, stored as one cyclic neighbor
/// order per vertex. Values are immutable; edits produce new systems.
///
/// Invariants (checked on construction): every neighbor list is free of
/// duplicates and self-loops, and adjacency is symmetric. Vertex ids need not
/// be dense.
class RotationSystem
{
  public:
    RotationSystem() = default;

    /// Builds and validates a system. Throws SelfLoop, DuplicateNeighbor or
    /// SymmetryViolation.
    static RotationSystem from_rotations(const std::map<Vertex, std::vector<Vertex>>& rotations)
    {
        RotationSystem rs;
        rs.ids_.reserve(rotations.size());
        rs.rot_.reserve(rotations.size());
        for(const auto& [v, r] : rotations)
        {
            rs.ids_.push_back(v);
            rs.rot_.push_back(r);
        }
        rs.pos_.resize(rs.ids_.size());
        for(std::size_t i = 0; i < rs.ids_.size(); ++i)
        {
            rs.check_local(i);
            rs.rebuild_positions(i);
        }
        for(std::size_t i = 0; i < rs.ids_.size(); ++i)
        {
            rs.check_symmetric(i);
        }
        return rs;
    }

    const std::vector<Vertex>& vertices() const noexcept {return ids_;}

    std::size_t num_vertices() const noexcept {return ids_.size();}

    std::size_t num_edges() const noexcept
    {
        std::size_t half = 0;
        for(const auto& r : rot_) {half += r.size();}
        return half / 2;
    }

    bool has_vertex(Vertex v) const noexcept
    {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    /// Dense index of v in vertices(). Precondition: has_vertex(v).
    std::size_t index_of(Vertex v) const
    {
        const auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        ensure(it != ids_.end() && *it == v, ErrorCode::BadAnchor,
               "no vertex " + std::to_string(v));
        return static_cast<std::size_t>(it - ids_.begin());
    }

    std::span<const Vertex> rotation(Vertex v) const {return rot_[index_of(v)];}
    std::span<const Vertex> rotation_at(std::size_t idx) const noexcept {return rot_[idx];}

    std::size_t degree(Vertex v) const {return rot_[index_of(v)].size();}

    bool has_edge(Vertex u, Vertex v) const
    {
        if(!has_vertex(u) || !has_vertex(v)) {return false;}
        return find_position(index_of(u), v) != npos;
    }

    /// Position of neighbor u within rotation(v), or npos.
    std::size_t position(Vertex v, Vertex u) const {return find_position(index_of(v), u);}

    std::size_t position_at(std::size_t v_idx, Vertex u) const noexcept {return find_position(v_idx, u);}

    /// The neighbor immediately following u in rotation(v).
    Vertex successor(Vertex v, Vertex u) const
    {
        const std::size_t vi = index_of(v);
        const std::size_t p  = find_position(vi, u);
        ensure(p != npos, ErrorCode::NoSuchEdge, "no edge " + to_string(Edge::of(u, v)));
        return rot_[vi][(p + 1) % rot_[vi].size()];
    }

    /// The neighbor immediately preceding u in rotation(v).
    Vertex predecessor(Vertex v, Vertex u) const
    {
        const std::size_t vi = index_of(v);
        const std::size_t p  = find_position(vi, u);
        ensure(p != npos, ErrorCode::NoSuchEdge, "no edge " + to_string(Edge::of(u, v)));
        const std::size_t d = rot_[vi].size();
        return rot_[vi][(p + d - 1) % d];
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for(std::size_t i = 0; i < ids_.size(); ++i)
        {
            for(const Vertex u : rot_[i])
            {
                if(ids_[i] < u) {out.push_back(Edge{ids_[i], u});}
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool connected() const
    {
        if(ids_.empty()) {return false;}
        std::vector<char> seen(ids_.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while(!stack.empty())
        {
            const std::size_t i = stack.back();
            stack.pop_back();
            for(const Vertex u : rot_[i])
            {
                const std::size_t j = index_of(u);
                if(!seen[j]) {seen[j] = 1; ++count; stack.push_back(j);}
            }
        }
        return count == ids_.size();
    }

    /// Every rotation reversed: the same graph on the mirror-image surface.
    RotationSystem mirror() const
    {
        RotationSystem out = *this;
        for(std::size_t i = 0; i < out.rot_.size(); ++i)
        {
            std::reverse(out.rot_[i].begin(), out.rot_[i].end());
            out.rebuild_positions(i);
        }
        return out;
    }

    /// Copy with the rotations of the listed vertices replaced. Only the
    /// touched vertices and their old and new neighbors are re-validated.
    RotationSystem with_rotations(const std::vector<std::pair<Vertex, std::vector<Vertex>>>& changes) const
    {
        RotationSystem out = *this;
        std::vector<std::size_t> touched;
        for(const auto& [v, r] : changes)
        {
            const std::size_t i = out.index_of(v);
            for(const Vertex u : out.rot_[i])
            {
                if(out.has_vertex(u)) {touched.push_back(out.index_of(u));}
            }
            out.rot_[i] = r;
            out.check_local(i);
            out.rebuild_positions(i);
            touched.push_back(i);
        }
        for(const auto& [v, r] : changes)
        {
            for(const Vertex u : r) {touched.push_back(out.index_of(u));}
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for(const std::size_t i : touched) {out.check_symmetric(i);}
        return out;
    }

    /// Rotations compare as cyclic orders; the written starting point does not matter.
    friend bool operator==(const RotationSystem& a, const RotationSystem& b)
    {
        if(a.ids_ != b.ids_) {return false;}
        for(std::size_t i = 0; i < a.rot_.size(); ++i)
        {
            const auto& x = a.rot_[i];
            const auto& y = b.rot_[i];
            if(x.size() != y.size()) {return false;}
            if(x.empty()) {continue;}
            const auto start = std::find(y.begin(), y.end(), x.front());
            if(start == y.end()) {return false;}
            if(!std::equal(start, y.end(), x.begin()) ||
               !std::equal(y.begin(), start, x.begin() + (y.end() - start)))
            {
                return false;
            }
        }
        return true;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t find_position(std::size_t vi, Vertex u) const noexcept
    {
        const auto& p = pos_[vi];
        const auto it = std::lower_bound(p.begin(), p.end(), std::make_pair(u, std::uint32_t{0}));
        if(it == p.end() || it->first != u) {return npos;}
        return it->second;
    }

    void check_local(std::size_t i) const
    {
        const Vertex v = ids_[i];
        std::vector<Vertex> sorted = rot_[i];
        std::sort(sorted.begin(), sorted.end());
        for(std::size_t k = 0; k < sorted.size(); ++k)
        {
            ensure(sorted[k] != v, ErrorCode::SelfLoop,
                   "vertex " + std::to_string(v) + " lists itself");
            ensure(k == 0 || sorted[k] != sorted[k - 1], ErrorCode::DuplicateNeighbor,
                   "vertex " + std::to_string(v) + " lists " + std::to_string(sorted[k]) + " twice");
        }
    }

    void check_symmetric(std::size_t i) const
    {
        const Vertex v = ids_[i];
        for(const Vertex u : rot_[i])
        {
            ensure(has_vertex(u), ErrorCode::SymmetryViolation,
                   "vertex " + std::to_string(v) + " lists unknown vertex " + std::to_string(u));
            ensure(find_position(index_of(u), v) != npos, ErrorCode::SymmetryViolation,
                   std::to_string(v) + " lists " + std::to_string(u) + " but not vice versa");
        }
    }

    void rebuild_positions(std::size_t i)
    {
        auto& p = pos_[i];
        p.clear();
        p.reserve(rot_[i].size());
        for(std::size_t k = 0; k < rot_[i].size(); ++k)
        {
            p.emplace_back(rot_[i][k], static_cast<std::uint32_t>(k));
        }
        std::sort(p.begin(), p.end());
    }

    std::vector<Vertex> ids_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> pos_;
};

namespace detail
{

inline std::string_view trim(std::string_view s) noexcept
{
    const auto b = s.find_first_not_of(" \t\r");
    if(b == std::string_view::npos) {return {};}
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while(i < s.size())
    {
        while(i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {++i;}
        const std::size_t b = i;
        while(i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {++i;}
        if(i > b) {out.push_back(s.substr(b, i - b));}
    }
    return out;
}

template<typename Int>
bool parse_int(std::string_view s, Int& out) noexcept
{
    if(s.empty()) {return false;}
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

template<typename F>
void for_each_line(std::string_view text, F&& f)
{
    std::size_t lineno = 0;
    while(!text.empty())
    {
        ++lineno;
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const std::string_view t = trim(line);
        if(t.empty() || t.front() == '#') {continue;}
        f(t, lineno);
    }
}

} // detail

/// Reads the embedding text format: one `<id>. n1 n2 ... nk` line per vertex,
/// `#` comment lines, rotation read left to right. The graph must be connected.
inline RotationSystem parse_rotation_system(std::string_view text)
{
    std::map<Vertex, std::vector<Vertex>> rotations;
    detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        const std::string where = "line " + std::to_string(lineno);
        const auto dot = line.find('.');
        ensure(dot != std::string_view::npos, ErrorCode::ParseError, where + ": missing '.' after vertex id");
        Vertex v = 0;
        ensure(detail::parse_int(detail::trim(line.substr(0, dot)), v), ErrorCode::ParseError,
               where + ": bad vertex id");
        std::vector<Vertex> rot;
        for(const auto tok : detail::split_ws(line.substr(dot + 1)))
        {
            Vertex u = 0;
            ensure(detail::parse_int(tok, u), ErrorCode::ParseError,
                   where + ": bad neighbor '" + std::string(tok) + "'");
            rot.push_back(u);
        }
        ensure(rotations.emplace(v, std::move(rot)).second, ErrorCode::ParseError,
               where + ": vertex " + std::to_string(v) + " listed twice");
    });
    ensure(!rotations.empty(), ErrorCode::ParseError, "no vertices");
    RotationSystem rs = RotationSystem::from_rotations(rotations);
    ensure(rs.connected(), ErrorCode::Disconnected, "embedding graph is not connected");
    return rs;
}

/// Writes the embedding text format, vertices in ascending id order.
inline std::string write_rotation_system(const RotationSystem& rs)
{
    std::ostringstream os;
    for(std::size_t i = 0; i < rs.num_vertices(); ++i)
    {
        os << rs.vertices()[i] << '.';
        for(const Vertex u : rs.rotation_at(i)) {os << ' ' << u;}
        os << '\n';
    }
    return os.str();
}

} // dsep
#endif // DSEP_ROTATION_SYSTEM_HPP
