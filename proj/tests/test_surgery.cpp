#include "dsep/corpus.hpp"
#include "dsep/current_graph.hpp"
#include "dsep/surgery.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsep;

namespace
{

const std::string data_dir = DSEP_TEST_DATA;

const RotationSystem& host()
{
    static const RotationSystem rs = derive(parse_current_graph(oracle::slurp(data_dir + "/z27.cg")));
    return rs;
}

const HandlePattern table_roles{0, 3, 4, 5, 6, 9, 27, 28, 20, 2, 7, 16};

const SurgeryReport& report()
{
    static const SurgeryReport r = run_surgery(host());
    return r;
}

bool contains_cyclically(std::span<const Vertex> rot, const std::vector<Vertex>& run)
{
    for(std::size_t s = 0; s < rot.size(); ++s)
    {
        bool ok = true;
        for(std::size_t k = 0; k < run.size() && ok; ++k) {ok = rot[(s + k) % rot.size()] == run[k];}
        if(ok) {return true;}
    }
    return false;
}

ErrorCode code_of(auto&& f)
{
    try {f();}
    catch(const Error& e) {return e.code();}
    return ErrorCode::Io;
}

struct OracleView
{
    std::vector<std::vector<Vertex>> faces;
    long genus;
};

OracleView view(const RotationSystem& rs)
{
    const auto r = oracle::rotations_of(rs);
    return {oracle::faces(r), oracle::genus(r)};
}

// Dual adjacency rebuilt from the oracle's face walks.
std::vector<std::pair<std::size_t, std::size_t>> oracle_dual(const std::vector<std::vector<Vertex>>& walks)
{
    std::map<std::pair<Vertex, Vertex>, std::size_t> arc_face;
    for(std::size_t f = 0; f < walks.size(); ++f)
    {
        for(std::size_t i = 0; i < walks[f].size(); ++i)
        {
            arc_face[{walks[f][i], walks[f][(i + 1) % walks[f].size()]}] = f;
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for(const auto& [arc, f] : arc_face)
    {
        if(arc.first < arc.second) {out.emplace_back(f, arc_face.at({arc.second, arc.first}));}
    }
    return out;
}

} // namespace

TEST(Locate, FindsTheTableRoles)
{
    const auto found = locate_pattern(host());
    ASSERT_FALSE(found.empty());
    EXPECT_EQ(found.front(), table_roles);
    // Shifting by 3 maps the derived embedding to itself, so every translate matches too.
    for(const auto& hp : found)
    {
        EXPECT_FALSE(host().has_edge(hp.x, hp.y));
        EXPECT_EQ(std::set<Vertex>({hp.x, hp.y}), (std::set<Vertex>{27, 28}));
    }
}

TEST(Locate, NoMatchOnTetrahedronOrMirror)
{
    EXPECT_TRUE(locate_pattern(parse_rotation_system("0. 1 2 3\n1. 0 3 2\n2. 0 1 3\n3. 0 2 1\n")).empty());
    EXPECT_TRUE(locate_pattern(host().mirror()).empty());
}

TEST(Remove, RevealsTwoTriangles)
{
    const auto before = view(host());
    const auto cut    = remove_handle(host(), table_roles);
    const auto after  = view(cut);
    EXPECT_EQ(static_cast<long>(host().num_edges()) - static_cast<long>(cut.num_edges()), 6);
    EXPECT_EQ(static_cast<long>(before.faces.size()) - static_cast<long>(after.faces.size()), 4);
    EXPECT_EQ(after.genus, before.genus - 1);
    for(const auto& w : after.faces) {EXPECT_EQ(w.size(), 3u);}
    EXPECT_TRUE(contains_cyclically(cut.rotation(0), {20, 5, 6, 2}));
    const auto fs = trace_faces(cut);
    EXPECT_TRUE(fs.find_face({0, 6, 5}));
    EXPECT_TRUE(fs.find_face({3, 4, 9}));
}

TEST(Remove, ForgedPatternFails)
{
    const auto tet = parse_rotation_system("0. 1 2 3\n1. 0 3 2\n2. 0 1 3\n3. 0 2 1\n");
    const HandlePattern forged{0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3};
    EXPECT_EQ(code_of([&] {remove_handle(tet, forged);}), ErrorCode::PostconditionFail);
    EXPECT_EQ(code_of([&] {remove_handle(tet, table_roles);}), ErrorCode::PostconditionFail);
}

TEST(Reverse, TwoNineGonsAndInvolution)
{
    const auto cut = remove_handle(host(), table_roles);
    const auto rev = reverse_revealed(cut, table_roles);
    const auto a = view(cut), b = view(rev);
    EXPECT_EQ(static_cast<long>(a.faces.size()) - static_cast<long>(b.faces.size()), 4);
    EXPECT_EQ(b.genus, a.genus + 2);
    EXPECT_EQ(oracle::census(b.faces)[9], 2u);
    EXPECT_TRUE(contains_cyclically(rev.rotation(0), {20, 6, 5, 2}));
    EXPECT_EQ(reverse_revealed(rev, table_roles), cut);
}

TEST(Reinsert, NineGonsCutOffTheHandle)
{
    const auto rev = reverse_revealed(remove_handle(host(), table_roles), table_roles);
    const auto re  = reinsert_handle(rev, table_roles);
    EXPECT_EQ(re.num_edges(), host().num_edges());
    for(const Edge& e : table_roles.handle_edges()) {EXPECT_TRUE(re.has_edge(e.u, e.v));}

    const auto v = view(re);
    EXPECT_EQ(v.genus, view(host()).genus + 2);   // -1, +2, +1
    std::vector<std::size_t> nines;
    for(std::size_t f = 0; f < v.faces.size(); ++f) {if(v.faces[f].size() == 9) {nines.push_back(f);}}
    ASSERT_EQ(nines.size(), 2u);

    // Remove both 9-gons from the oracle dual and look for a six-face side on handle vertices.
    std::map<std::size_t, std::set<std::size_t>> adj;
    for(const auto& [a, b] : oracle_dual(v.faces))
    {
        if(a == nines[0] || a == nines[1] || b == nines[0] || b == nines[1]) {continue;}
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::set<std::size_t> seen{nines[0], nines[1]};
    std::vector<std::vector<std::size_t>> comps;
    for(std::size_t f = 0; f < v.faces.size(); ++f)
    {
        if(seen.count(f)) {continue;}
        std::vector<std::size_t> comp, stack{f};
        seen.insert(f);
        while(!stack.empty())
        {
            const auto g = stack.back();
            stack.pop_back();
            comp.push_back(g);
            for(const auto h : adj[g]) {if(seen.insert(h).second) {stack.push_back(h);}}
        }
        comps.push_back(comp);
    }
    ASSERT_GE(comps.size(), 2u);
    const std::set<Vertex> handle{0, 3, 4, 5, 6, 9};
    bool six = false;
    for(const auto& c : comps)
    {
        if(c.size() != 6) {continue;}
        bool inside = true;
        for(const auto f : c) {for(const Vertex x : v.faces[f]) {inside = inside && handle.count(x);}}
        six = six || inside;
    }
    EXPECT_TRUE(six);
}

TEST(Reinsert, AdjacentXYIsRejected)
{
    const auto rev = reverse_revealed(remove_handle(host(), table_roles), table_roles);
    const auto fs  = trace_faces(rev);
    const Vertex x = 27, y = 28;
    const auto tampered = insert_edge(rev, x, Anchor::after(rev.rotation(x)[0]), y, Anchor::after(rev.rotation(y)[0]));
    EXPECT_EQ(code_of([&] {reinsert_handle(tampered, table_roles);}), ErrorCode::NoValidReinsertion);
    const auto tampered_host = insert_edge(host(), x, Anchor::after(host().rotation(x)[0]), y,
                                           Anchor::after(host().rotation(y)[0]));
    EXPECT_TRUE(locate_pattern(tampered_host).empty());
}

TEST(Pipeline, StepDeltas)
{
    const auto& r = report();
    ASSERT_EQ(r.steps.size(), 4u);
    const std::vector<std::int64_t> dg{-1, 2, 1, 1};
    std::int64_t sum_e = 0, sum_g = 0;
    for(std::size_t i = 0; i < 4; ++i)
    {
        const auto& s = r.steps[i];
        EXPECT_EQ(s.delta_genus, dg[i]) << s.name;
        EXPECT_EQ(-s.delta_edges + s.delta_faces, -2 * s.delta_genus) << s.name;   // Euler, V fixed
        sum_e += s.delta_edges;
        sum_g += s.delta_genus;
    }
    EXPECT_EQ(sum_e, 1);
    EXPECT_EQ(sum_g, 3);
    EXPECT_EQ(r.steps[0].delta_edges, -6);
    EXPECT_EQ(r.steps[0].delta_faces, -4);
    EXPECT_EQ(r.steps[1].delta_faces, -4);
    EXPECT_EQ(r.steps[2].delta_faces, 4);
}

TEST(Pipeline, FinalEmbedding)
{
    const auto& r = report();
    const auto& rs = r.result();
    ASSERT_EQ(rs.num_vertices(), 29u);
    for(const Vertex v : rs.vertices()) {EXPECT_EQ(rs.degree(v), 28u);}
    EXPECT_EQ(rs.num_edges(), 29u * 28u / 2u);

    const auto v = view(rs);
    // gamma(K29) = ceil(26 * 25 / 12) = 55
    EXPECT_EQ(v.genus, 57);
    const auto census = oracle::census(v.faces);
    EXPECT_EQ(census.at(18), 1u);
    EXPECT_EQ(census.at(4), 2u);
    EXPECT_EQ(census.size(), 3u);
    long excess = 0;
    for(const auto& w : v.faces) {excess += static_cast<long>(w.size()) - 3;}
    EXPECT_EQ(excess, 17);

    // simple dual: no loops, no two faces sharing two edges
    const auto pairs = oracle_dual(v.faces);
    std::map<std::pair<std::size_t, std::size_t>, int> shared;
    for(const auto& [a, b] : pairs)
    {
        EXPECT_NE(a, b);
        ++shared[std::minmax(a, b)];
    }
    for(const auto& [p, k] : shared) {EXPECT_EQ(k, 1);}

    // the 18-gon is an articulation node of the dual
    std::size_t gon = 0;
    for(std::size_t f = 0; f < v.faces.size(); ++f) {if(v.faces[f].size() == 18) {gon = f;}}
    const auto cuts = oracle::articulation_by_deletion(v.faces.size(), pairs);
    EXPECT_TRUE(std::find(cuts.begin(), cuts.end(), gon) != cuts.end());

    EXPECT_TRUE(r.final_simplicity.simple);
    EXPECT_EQ(r.final_summary.face_excess, 17);
    EXPECT_EQ(trace_faces(rs).length(r.cutface), 18u);
    bool handle_block = false;
    for(const auto& c : r.separation.components) {handle_block = handle_block || c.size() == 6;}
    EXPECT_TRUE(handle_block);
}

TEST(Pipeline, BridgeUsesXY)
{
    const auto& b = report().bridge;
    int xy = 0;
    for(const auto& p : b.merge_edges) {xy += Edge::of(p.edge.u, p.edge.v) == Edge{27, 28};}
    EXPECT_EQ(xy, 1);
    for(const auto& moved : b.relocated_from)
    {
        EXPECT_TRUE(host().has_edge(moved.edge.u, moved.edge.v));
        EXPECT_TRUE(report().result().has_edge(moved.edge.u, moved.edge.v));
    }
}

TEST(Pipeline, Deterministic)
{
    const auto again = run_surgery(host());
    EXPECT_EQ(again.result(), report().result());
    for(std::size_t i = 0; i < 3; ++i)
    {
        EXPECT_EQ(again.bridge.merge_edges[i].edge, report().bridge.merge_edges[i].edge);
        EXPECT_EQ(again.bridge.merge_edges[i].anchors.at_u, report().bridge.merge_edges[i].anchors.at_u);
        EXPECT_EQ(again.bridge.merge_edges[i].anchors.at_v, report().bridge.merge_edges[i].anchors.at_v);
    }
}

TEST(Pipeline, NoPattern)
{
    EXPECT_EQ(code_of([] {run_surgery(find_corpus("K17")->load());}), ErrorCode::NoPattern);
    std::map<Vertex, std::vector<Vertex>> k7;
    for(Vertex i = 0; i < 7; ++i) {for(const Vertex d : {1u, 3u, 2u, 6u, 4u, 5u}) {k7[i].push_back((i + d) % 7);}}
    EXPECT_EQ(code_of([&] {run_surgery(RotationSystem::from_rotations(k7));}), ErrorCode::NoPattern);
    EXPECT_EQ(code_of([] {run_surgery(host().mirror());}), ErrorCode::NoPattern);
}

TEST(Pipeline, HostFileMatchesDerivation)
{
    EXPECT_EQ(oracle::slurp(data_dir + "/k29_minus_edge.rot"), write_rotation_system(host()));
}
