#ifndef DSEP_SURGERY_HPP
#define DSEP_SURGERY_HPP

#include "dual.hpp"
#include "edit.hpp"
#include "faces.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

// Subtractible-handle surgery. A triangular embedding of K_n - E(K_2) whose
// rotations contain the six-row block
//
//     p0.  a  p5 p9 p4 p6 b
//     p3.  c  p9 p5 p6 p4 y
//     p4.  y  p3 p6 p0 p9 d
//     p5.  x  p6 p3 p9 p0 a
//     p6.  b  p0 p4 p3 p5 x
//     p9.  d  p4 p0 p5 p3 c
//
// (x, y the non-adjacent pair) is turned into an embedding of K_n with an
// 18-gon cutface and a simple dual, three genus higher.

namespace dsep
{

struct HandlePattern
{
    Vertex p0, p3, p4, p5, p6, p9;
    Vertex x, y;
    Vertex a, b, c, d;   // flanking entries of the block

    /// The six edges of the subtractible handle (the two middle columns).
    std::array<Edge, 6> handle_edges() const
    {
        return {Edge::of(p0, p9), Edge::of(p0, p4), Edge::of(p3, p5),
                Edge::of(p3, p6), Edge::of(p4, p6), Edge::of(p5, p9)};
    }

    std::array<Vertex, 6> handle_vertices() const {return {p0, p3, p4, p5, p6, p9};}

    Triangle first_triangle() const {return {p0, p6, p5};}
    Triangle second_triangle() const {return {p3, p4, p9};}

    friend bool operator==(const HandlePattern&, const HandlePattern&) = default;
};

namespace detail
{

enum Role {P0, P3, P4, P5, P6, P9, X, Y, A, B, C, D, role_count};

struct PatternRow
{
    Role center;
    std::array<Role, 6> window;
};

inline constexpr std::array<PatternRow, 6> pattern_rows{{
    {P0, {A, P5, P9, P4, P6, B}},
    {P5, {X, P6, P3, P9, P0, A}},
    {P6, {B, P0, P4, P3, P5, X}},
    {P3, {C, P9, P5, P6, P4, Y}},
    {P4, {Y, P3, P6, P0, P9, D}},
    {P9, {D, P4, P0, P5, P3, C}},
}};

constexpr Vertex unset = static_cast<Vertex>(-1);

/// Reads the 6-window of `row` around the first already-assigned role and
/// unifies it with the assignment.
inline bool unify_row(const RotationSystem& rs, const PatternRow& row, std::array<Vertex, role_count>& roles)
{
    const Vertex center = roles[row.center];
    const auto rot = rs.rotation(center);
    if(rot.size() < row.window.size()) {return false;}
    std::size_t start = RotationSystem::npos;
    for(std::size_t k = 0; k < row.window.size() && start == RotationSystem::npos; ++k)
    {
        if(roles[row.window[k]] == unset) {continue;}
        const std::size_t p = rs.position(center, roles[row.window[k]]);
        if(p == RotationSystem::npos) {return false;}
        start = (p + rot.size() - k) % rot.size();
    }
    if(start == RotationSystem::npos) {return false;}
    for(std::size_t k = 0; k < row.window.size(); ++k)
    {
        const Vertex seen = rot[(start + k) % rot.size()];
        Vertex& slot = roles[row.window[k]];
        if(slot == unset) {slot = seen;}
        else if(slot != seen) {return false;}
    }
    return true;
}

inline bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    if(a.size() != b.size()) {return false;}
    for(std::size_t s = 0; s < a.size(); ++s)
    {
        bool ok = true;
        for(std::size_t k = 0; k < a.size() && ok; ++k) {ok = a[(s + k) % a.size()] == b[k];}
        if(ok) {return true;}
    }
    return false;
}

/// Faces whose corners all lie in `allowed`.
inline bool face_within(const FaceSet& fs, std::size_t f, const std::set<Vertex>& allowed)
{
    for(const Arc& a : fs.face(f)) {if(!allowed.count(a.tail)) {return false;}}
    return true;
}

/// Corners of v, each named by the neighbor it follows. The corner after p
/// lies on the face through arc (p, v).
struct Corner
{
    Vertex vertex;
    Vertex after;
    std::size_t face;
};

inline std::vector<Corner> corners_on(const RotationSystem& rs, const FaceSet& fs, Vertex v,
                                      const std::function<bool(std::size_t)>& face_ok)
{
    std::vector<Corner> out;
    for(const Vertex p : rs.rotation(v))
    {
        const std::size_t f = *fs.face_of(Arc{p, v});
        if(face_ok(f)) {out.push_back(Corner{v, p, f});}
    }
    return out;
}

inline std::optional<std::size_t> nine_gon_through(const FaceSet& fs, const std::array<Vertex, 3>& corners)
{
    std::optional<std::size_t> found;
    for(std::size_t f = 0; f < fs.size(); ++f)
    {
        if(fs.length(f) != 9) {continue;}
        const auto vs = fs.vertices_of(f);
        const std::set<Vertex> s(vs.begin(), vs.end());
        if(s.count(corners[0]) && s.count(corners[1]) && s.count(corners[2]))
        {
            if(found) {return std::nullopt;}
            found = f;
        }
    }
    return found;
}

} // detail

/// Every role assignment under which the six rows appear (in the table's
/// orientation only), sorted by (p0, p3, p4, p5, p6, p9, x, y).
inline std::vector<HandlePattern> locate_pattern(const RotationSystem& rs)
{
    using namespace detail;
    std::vector<HandlePattern> out;
    for(const Vertex p0 : rs.vertices())
    {
        const auto rot = rs.rotation(p0);
        if(rot.size() < 6) {continue;}
        for(std::size_t i = 0; i < rot.size(); ++i)
        {
            std::array<Vertex, role_count> roles;
            roles.fill(unset);
            roles[P0] = p0;
            roles[A]  = rot[i];
            bool ok = unify_row(rs, pattern_rows[0], roles);
            for(std::size_t r = 1; r < pattern_rows.size() && ok; ++r) {ok = unify_row(rs, pattern_rows[r], roles);}
            if(!ok) {continue;}
            std::set<Vertex> distinct(roles.begin(), roles.end());
            if(distinct.size() != role_count || rs.has_edge(roles[X], roles[Y])) {continue;}
            out.push_back(HandlePattern{roles[P0], roles[P3], roles[P4], roles[P5], roles[P6], roles[P9],
                                        roles[X], roles[Y], roles[A], roles[B], roles[C], roles[D]});
        }
    }
    auto key = [](const HandlePattern& h) {return std::tie(h.p0, h.p3, h.p4, h.p5, h.p6, h.p9, h.x, h.y);};
    std::sort(out.begin(), out.end(), [&](const HandlePattern& l, const HandlePattern& r) {return key(l) < key(r);});
    return out;
}

/// Deletes the six handle edges. The result must stay triangular, lose exactly
/// one genus, and show the faces [p0,p6,p5] and [p3,p4,p9].
inline RotationSystem remove_handle(const RotationSystem& rs, const HandlePattern& hp)
{
    try
    {
        const EmbeddingSummary before = summarize(rs);
        RotationSystem out = rs;
        for(const Edge& e : hp.handle_edges()) {out = delete_edge(out, e.u, e.v);}
        const FaceSet fs = trace_faces(out);
        const EmbeddingSummary after = summarize(out, fs);
        const auto t1 = hp.first_triangle(), t2 = hp.second_triangle();
        ensure(after.triangular(), ErrorCode::PostconditionFail, "result is not triangular");
        ensure(after.genus + 1 == before.genus, ErrorCode::PostconditionFail, "genus did not drop by one");
        ensure(fs.find_face({t1[0], t1[1], t1[2]}) && fs.find_face({t2[0], t2[1], t2[2]}),
               ErrorCode::PostconditionFail, "revealed triangles missing");
        return out;
    }
    catch(const Error& e)
    {
        if(e.code() == ErrorCode::PostconditionFail) {throw;}
        fail(ErrorCode::PostconditionFail, std::string("handle removal: ") + e.what());
    }
}

/// Reverses both revealed triangles. Forward: two 9-gons appear, F drops by 4
/// and genus rises by 2. Applied to already reversed triangles it undoes that.
inline RotationSystem reverse_revealed(const RotationSystem& rs, const HandlePattern& hp)
{
    const auto t1 = hp.first_triangle(), t2 = hp.second_triangle();
    const FaceSet fs = trace_faces(rs);
    const bool forward  = fs.find_face({t1[0], t1[1], t1[2]}) && fs.find_face({t2[0], t2[1], t2[2]});
    const bool backward = fs.find_face({t1[0], t1[2], t1[1]}) && fs.find_face({t2[0], t2[2], t2[1]});
    ensure(forward || backward, ErrorCode::PostconditionFail, "revealed triangles are not faces");

    const EmbeddingSummary before = summarize(rs, fs);
    const RotationSystem out = reverse_triangle(reverse_triangle(rs, t1), t2);
    const FaceSet ofs = trace_faces(out);
    const EmbeddingSummary after = summarize(out, ofs);
    if(forward)
    {
        ensure(after.num_faces + 4 == before.num_faces && after.genus == before.genus + 2,
               ErrorCode::PostconditionFail, "reversal must remove 4 faces and add 2 genus");
        ensure(after.count_of_length(9) == before.count_of_length(9) + 2
                   && detail::nine_gon_through(ofs, t1) && detail::nine_gon_through(ofs, t2),
               ErrorCode::PostconditionFail, "reversal did not create a 9-gon around each triangle");
    }
    else
    {
        ensure(after.num_faces == before.num_faces + 4 && after.genus + 2 == before.genus,
               ErrorCode::PostconditionFail, "undoing the reversal must restore 4 faces");
    }
    return out;
}

/// The two 9-gons of the post-reversal state plus the faces between them.
struct NineGonPair
{
    std::size_t first;    // through p0, p5, p6
    std::size_t second;   // through p3, p4, p9
};

inline std::optional<NineGonPair> find_nine_gons(const FaceSet& fs, const HandlePattern& hp)
{
    const auto a = detail::nine_gon_through(fs, hp.first_triangle());
    const auto b = detail::nine_gon_through(fs, hp.second_triangle());
    if(!a || !b || *a == *b) {return std::nullopt;}
    return NineGonPair{*a, *b};
}

/// True if the two 9-gons cut the dual with a side of exactly six faces, all
/// spanned by the handle vertices.
inline bool nine_gons_isolate_handle(const FaceSet& fs, const HandlePattern& hp)
{
    const auto pair = find_nine_gons(fs, hp);
    if(!pair) {return false;}
    const DualGraph d = build_dual(fs);
    const TwoCutResult cut = find_2cuts_containing(d, pair->first, pair->second);
    if(!cut) {return false;}
    const auto hv = hp.handle_vertices();
    const std::set<Vertex> handle(hv.begin(), hv.end());
    for(const auto& comp : cut.components)
    {
        if(comp.size() != 6) {continue;}
        bool inside = true;
        for(const std::size_t f : comp) {inside = inside && detail::face_within(fs, f, handle);}
        if(inside) {return true;}
    }
    return false;
}

/// Puts the six handle edges back between the reversed triangles. Anchors come
/// from a depth-first search over corners of faces spanned by the handle
/// vertices, edges in handle_edges() order and corners in rotation order; the
/// first placement that keeps both 9-gons, isolates six handle faces behind
/// them and adds exactly one genus wins.
inline RotationSystem reinsert_handle(const RotationSystem& rs, const HandlePattern& hp)
{
    const EmbeddingSummary start = summarize(rs);
    const auto edges = hp.handle_edges();
    for(const Edge& e : edges)
    {
        ensure(!rs.has_edge(e.u, e.v), ErrorCode::NoValidReinsertion, "handle edge " + to_string(e) + " present");
    }
    ensure(!rs.has_edge(hp.x, hp.y), ErrorCode::NoValidReinsertion, "x and y are already adjacent");
    const auto hv = hp.handle_vertices();
    const std::set<Vertex> handle(hv.begin(), hv.end());

    std::optional<RotationSystem> found;
    std::function<void(const RotationSystem&, std::size_t)> place = [&](const RotationSystem& cur, std::size_t k) {
        if(found) {return;}
        const FaceSet fs = trace_faces(cur);
        const EmbeddingSummary s = summarize(cur, fs);
        if(s.genus > start.genus + 1) {return;}
        if(k == edges.size())
        {
            if(s.genus == start.genus + 1 && s.count_of_length(9) == 2 && nine_gons_isolate_handle(fs, hp))
            {
                found = cur;
            }
            return;
        }
        auto in_region = [&](std::size_t f) {return detail::face_within(fs, f, handle);};
        const Edge e = edges[k];
        for(const auto& cu : detail::corners_on(cur, fs, e.u, in_region))
        {
            for(const auto& cv : detail::corners_on(cur, fs, e.v, in_region))
            {
                place(insert_edge(cur, e.u, Anchor::after(cu.after), e.v, Anchor::after(cv.after)), k + 1);
                if(found) {return;}
            }
        }
    };
    place(rs, 0);
    ensure(found.has_value(), ErrorCode::NoValidReinsertion, "no anchor placement meets the postconditions");
    return *found;
}

/// One edge placed by the merge: endpoints and the neighbors it was put after.
struct PlacedEdge
{
    Edge edge;
    EdgeAnchors anchors;
};

struct BridgeChoice
{
    std::array<PlacedEdge, 3> merge_edges;     // in insertion order; one is {x,y}
    std::array<PlacedEdge, 2> relocated_from;  // original positions of the two moved edges
};

struct MergeResult
{
    RotationSystem embedding;
    BridgeChoice bridge;
};

namespace detail
{

/// Faces of the 18-gon certificate: the 18-gon is a cutface, the dual is simple
/// and one side of the cut is six handle faces.
inline std::optional<std::size_t> certified_cutface(const FaceSet& fs, const HandlePattern& hp,
                                                    std::size_t length = 18)
{
    const DualGraph d = build_dual(fs);
    if(!is_simple(d)) {return std::nullopt;}
    const auto hv = hp.handle_vertices();
    const std::set<Vertex> handle(hv.begin(), hv.end());
    for(const std::size_t f : find_cutfaces(d))
    {
        if(fs.length(f) != length) {continue;}
        for(const auto& comp : separation(d, f).components)
        {
            if(comp.size() != 6) {continue;}
            bool inside = true;
            for(const std::size_t g : comp) {inside = inside && face_within(fs, g, handle);}
            if(inside) {return f;}
        }
    }
    return std::nullopt;
}

/// The 20-gon left by the bridge must split into an 18-gon and two triangles,
/// each triangle made of a 9-gon rim edge and two of the new edges meeting at
/// a vertex. Checks that two such pairs exist before any tracing.
inline bool closes_two_triangles(const std::array<Edge, 3>& three, const std::set<Edge>& rim)
{
    int closing = 0;
    for(std::size_t i = 0; i < 3; ++i)
    {
        for(std::size_t j = i + 1; j < 3; ++j)
        {
            const Edge& e = three[i];
            const Edge& f = three[j];
            std::optional<Edge> third;
            if(e.u == f.u && e.v != f.v) {third = Edge::of(e.v, f.v);}
            if(e.v == f.v && e.u != f.u) {third = Edge::of(e.u, f.u);}
            if(third && rim.count(*third)) {++closing;}
        }
    }
    return closing >= 2;
}

} // detail

/// Joins the two 9-gons through a handle with three edges: the missing {x,y}
/// plus two existing edges between the 9-gons, first deleted from their
/// original places. Relocated pairs are tried in lexicographic order, then
/// insertion order and corners; the first embedding with an 18-gon cutface and
/// a simple dual wins.
inline MergeResult merge_nines(const RotationSystem& rs, const HandlePattern& hp)
{
    const FaceSet fs = trace_faces(rs);
    const EmbeddingSummary start = summarize(rs, fs);
    const auto pair = find_nine_gons(fs, hp);
    ensure(pair.has_value(), ErrorCode::NoValidMerge, "the two 9-gons are not present");
    ensure(!rs.has_edge(hp.x, hp.y), ErrorCode::NoValidMerge, "x and y are already adjacent");
    const auto cycle_a = fs.vertices_of(pair->first);
    const auto cycle_b = fs.vertices_of(pair->second);
    const std::set<Vertex> side_a(cycle_a.begin(), cycle_a.end());
    const std::set<Vertex> side_b(cycle_b.begin(), cycle_b.end());
    ensure(side_a.count(hp.x) != 0 && side_b.count(hp.y) != 0, ErrorCode::NoValidMerge,
           "x and y do not lie on opposite 9-gons");

    const auto he = hp.handle_edges();
    const std::set<Edge> handle_set(he.begin(), he.end());
    std::vector<Edge> candidates;
    for(const Edge& e : rs.edges())
    {
        const bool across = (side_a.count(e.u) && side_b.count(e.v)) || (side_b.count(e.u) && side_a.count(e.v));
        if(across && !handle_set.count(e)) {candidates.push_back(e);}
    }

    auto locate = [](const FaceSet& f, const std::vector<Vertex>& cycle) -> std::optional<std::size_t> {
        for(std::size_t i = 0; i < f.size(); ++i)
        {
            if(detail::same_cycle(f.vertices_of(i), cycle)) {return i;}
        }
        return std::nullopt;
    };
    auto oriented = [&](const Edge& e) {return side_a.count(e.u) ? e : Edge{e.v, e.u};};
    std::set<Edge> rim;
    for(const auto* cycle : {&cycle_a, &cycle_b})
    {
        for(std::size_t k = 0; k < cycle->size(); ++k)
        {
            rim.insert(Edge::of((*cycle)[k], (*cycle)[(k + 1) % cycle->size()]));
        }
    }

    for(std::size_t i = 0; i < candidates.size(); ++i)
    {
        for(std::size_t j = i + 1; j < candidates.size(); ++j)
        {
            const std::array<Edge, 2> moved{candidates[i], candidates[j]};
            std::array<Edge, 3> three{oriented(Edge{hp.x, hp.y}), oriented(moved[0]), oriented(moved[1])};
            if(!detail::closes_two_triangles(three, rim)) {continue;}
            const std::array<PlacedEdge, 2> origin{
                PlacedEdge{moved[0], anchors_of(rs, moved[0].u, moved[0].v)},
                PlacedEdge{moved[1], anchors_of(rs, moved[1].u, moved[1].v)}};
            const RotationSystem cut = delete_edge(delete_edge(rs, moved[0].u, moved[0].v), moved[1].u, moved[1].v);
            const FaceSet cfs = trace_faces(cut);
            const EmbeddingSummary cs = summarize(cut, cfs);
            if(cs.genus != start.genus || cs.count_of_length(4) != start.count_of_length(4) + 2) {continue;}
            const auto fa = locate(cfs, cycle_a), fb = locate(cfs, cycle_b);
            if(!fa || !fb) {continue;}

            std::sort(three.begin(), three.end());
            do
            {
                // Bridge: corners on the two distinct 9-gons.
                const Edge e1 = three[0];
                auto on_a = [&](std::size_t f) {return f == *fa;};
                auto on_b = [&](std::size_t f) {return f == *fb;};
                for(const auto& c1u : detail::corners_on(cut, cfs, e1.u, on_a))
                {
                    for(const auto& c1v : detail::corners_on(cut, cfs, e1.v, on_b))
                    {
                        const EdgeAnchors a1{Anchor::after(c1u.after), Anchor::after(c1v.after)};
                        const RotationSystem r1 = insert_edge(cut, e1.u, a1.at_u, e1.v, a1.at_v);
                        const FaceSet f1 = trace_faces(r1);
                        const std::size_t merged = *f1.face_of(Arc{e1.u, e1.v});

                        const Edge e2 = three[1];
                        auto on_m = [&](std::size_t f) {return f == merged;};
                        for(const auto& c2u : detail::corners_on(r1, f1, e2.u, on_m))
                        {
                            for(const auto& c2v : detail::corners_on(r1, f1, e2.v, on_m))
                            {
                                const EdgeAnchors a2{Anchor::after(c2u.after), Anchor::after(c2v.after)};
                                const RotationSystem r2 = insert_edge(r1, e2.u, a2.at_u, e2.v, a2.at_v);
                                const FaceSet f2 = trace_faces(r2);
                                const std::size_t s1 = *f2.face_of(Arc{e2.u, e2.v});
                                const std::size_t s2 = *f2.face_of(Arc{e2.v, e2.u});
                                if(s1 == s2) {continue;}
                                const std::size_t l1 = f2.length(s1), l2 = f2.length(s2);
                                if(l1 != 3 && l1 != 18 && l2 != 3 && l2 != 18) {continue;}

                                const Edge e3 = three[2];
                                auto on_split = [&](std::size_t f) {return f == s1 || f == s2;};
                                for(const auto& c3u : detail::corners_on(r2, f2, e3.u, on_split))
                                {
                                    for(const auto& c3v : detail::corners_on(r2, f2, e3.v, on_split))
                                    {
                                        if(c3u.face != c3v.face) {continue;}
                                        const EdgeAnchors a3{Anchor::after(c3u.after), Anchor::after(c3v.after)};
                                        const RotationSystem r3 = insert_edge(r2, e3.u, a3.at_u, e3.v, a3.at_v);
                                        const FaceSet f3 = trace_faces(r3);
                                        const EmbeddingSummary s3 = summarize(r3, f3);
                                        if(s3.genus != start.genus + 1) {continue;}
                                        if(!detail::certified_cutface(f3, hp)) {continue;}
                                        return MergeResult{r3, BridgeChoice{{PlacedEdge{e1, a1}, PlacedEdge{e2, a2},
                                                                             PlacedEdge{e3, a3}}, origin}};
                                    }
                                }
                            }
                        }
                    }
                }
            } while(std::next_permutation(three.begin(), three.end()));
        }
    }
    fail(ErrorCode::NoValidMerge, "no bridge choice yields a simple dual with an 18-gon cutface");
}

struct StepRecord
{
    std::string name;
    std::int64_t delta_edges = 0;
    std::int64_t delta_faces = 0;
    std::int64_t delta_genus = 0;
    std::string verdict;
};

struct SurgeryReport
{
    HandlePattern pattern{};
    std::vector<StepRecord> steps;
    std::vector<RotationSystem> stages;   // embedding after each step
    BridgeChoice bridge{};
    EmbeddingSummary input;
    EmbeddingSummary final_summary;
    SimplicityVerdict final_simplicity;
    std::size_t cutface = 0;
    SeparationCertificate separation;

    const RotationSystem& result() const {return stages.back();}
};

namespace detail
{

inline StepRecord step_delta(std::string name, const EmbeddingSummary& from, const EmbeddingSummary& to,
                             std::string verdict)
{
    auto d = [](std::size_t a, std::size_t b) {return static_cast<std::int64_t>(b) - static_cast<std::int64_t>(a);};
    return StepRecord{std::move(name), d(from.num_edges, to.num_edges), d(from.num_faces, to.num_faces),
                      d(from.genus, to.genus), std::move(verdict)};
}

} // detail

/// The full pipeline on a triangular embedding of K_n - E(K_2) holding the
/// handle block: remove, reverse, reinsert, merge. The first located pattern
/// is used; step failures propagate.
inline SurgeryReport run_surgery(const RotationSystem& rs)
{
    SurgeryReport report;
    report.input = summarize(rs);
    ensure(report.input.triangular(), ErrorCode::NoPattern, "input embedding is not triangular");
    const std::size_t n = rs.num_vertices();
    ensure(rs.num_edges() + 1 == n * (n - 1) / 2, ErrorCode::NoPattern, "input is not K_n minus one edge");
    const auto found = locate_pattern(rs);
    ensure(!found.empty(), ErrorCode::NoPattern, "no subtractible-handle block in the rotations");
    const HandlePattern hp = found.front();
    report.pattern = hp;

    EmbeddingSummary prev = report.input;
    auto record = [&](std::string name, RotationSystem next, std::string verdict) {
        const EmbeddingSummary s = summarize(next);
        report.steps.push_back(detail::step_delta(std::move(name), prev, s, std::move(verdict)));
        report.stages.push_back(std::move(next));
        prev = s;
    };

    record("remove_handle", remove_handle(rs, hp), "triangular, revealed triangles present");
    record("reverse_revealed", reverse_revealed(report.stages.back(), hp), "two 9-gons");
    record("reinsert_handle", reinsert_handle(report.stages.back(), hp), "9-gons form a dual 2-cut around 6 faces");
    MergeResult merged = merge_nines(report.stages.back(), hp);
    report.bridge = merged.bridge;
    record("merge_nines", std::move(merged.embedding), "18-gon cutface, simple dual");

    const FaceSet fs = trace_faces(report.result());
    report.final_summary    = summarize(report.result(), fs);
    const DualGraph d       = build_dual(fs);
    report.final_simplicity = is_simple(d);
    report.cutface          = detail::certified_cutface(fs, hp).value();
    report.separation       = separation(d, report.cutface);
    return report;
}

} // dsep
#endif // DSEP_SURGERY_HPP
