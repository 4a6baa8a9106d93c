#include "dsep/edit.hpp"
#include "dsep/faces.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsep;

namespace
{

RotationSystem k3() {return parse_rotation_system("0. 1 2\n1. 0 2\n2. 0 1\n");}

RotationSystem k7_torus()
{
    std::map<Vertex, std::vector<Vertex>> r;
    for(Vertex i = 0; i < 7; ++i)
    {
        for(const Vertex d : {1u, 3u, 2u, 6u, 4u, 5u}) {r[i].push_back((i + d) % 7);}
    }
    return RotationSystem::from_rotations(r);
}

// Standard octahedron on the sphere: 0 and 5 are the poles, 1-2-3-4 the equator.
RotationSystem octahedron()
{
    return parse_rotation_system("0. 1 2 3 4\n"
                                 "1. 0 4 5 2\n"
                                 "2. 0 1 5 3\n"
                                 "3. 0 2 5 4\n"
                                 "4. 0 3 5 1\n"
                                 "5. 1 4 3 2\n");
}

ErrorCode code_of(auto&& f)
{
    try
    {
        f();
    }
    catch(const Error& e)
    {
        return e.code();
    }
    return ErrorCode::Io;   // nothing thrown; no test expects Io here
}

} // namespace

TEST(Parse, Triangle)
{
    const auto rs = k3();
    EXPECT_EQ(rs.num_vertices(), 3u);
    EXPECT_EQ(rs.num_edges(), 3u);
    EXPECT_EQ(rs.successor(0, 1), 2u);
    EXPECT_EQ(rs.predecessor(0, 1), 2u);
}

TEST(Parse, CommentsAndBlankLines)
{
    const auto rs = parse_rotation_system("# K3\n\n0. 1 2\n  1.  0   2\n# mid\n2. 0 1\n");
    EXPECT_EQ(rs, k3());
}

TEST(Parse, Errors)
{
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 1 2\n1. 0\n2. 0 1\n");}), ErrorCode::SymmetryViolation);
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 1 1\n1. 0\n");}), ErrorCode::DuplicateNeighbor);
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 0 1\n1. 0\n");}), ErrorCode::SelfLoop);
    EXPECT_EQ(code_of([] {parse_rotation_system("0 1 2\n");}), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 1 x\n");}), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 1\n1. 0\n0. 1\n");}), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {parse_rotation_system("0. 1\n1. 0\n2. 3\n3. 2\n");}), ErrorCode::Disconnected);
}

TEST(Parse, SparseIdsAreFine)
{
    const auto rs = parse_rotation_system("10. 40 70\n40. 10 70\n70. 10 40\n");
    EXPECT_EQ(summarize(rs).genus, 0u);
    EXPECT_EQ(write_rotation_system(rs), "10. 40 70\n40. 10 70\n70. 10 40\n");
}

TEST(Write, RoundTrip)
{
    const auto rs = k7_torus();
    EXPECT_EQ(parse_rotation_system(write_rotation_system(rs)), rs);
}

TEST(Equality, RotationsAreCyclic)
{
    const auto a = parse_rotation_system("0. 1 2 3\n1. 0 3 2\n2. 0 1 3\n3. 0 2 1\n");
    const auto b = parse_rotation_system("0. 2 3 1\n1. 3 2 0\n2. 0 1 3\n3. 1 0 2\n");
    EXPECT_EQ(a, b);
    EXPECT_NE(a, a.mirror());
    EXPECT_NE(a, k3());
}

TEST(Trace, TriangleHasTwoFaces)
{
    const auto rs = k3();
    const auto fs = trace_faces(rs);
    ASSERT_EQ(fs.size(), 2u);
    const auto s = summarize(rs, fs);
    EXPECT_EQ(s.num_vertices, 3u);
    EXPECT_EQ(s.num_edges, 3u);
    EXPECT_EQ(s.num_faces, 2u);
    EXPECT_EQ(s.genus, 0u);
    EXPECT_EQ(s.face_census, (FaceCensus{{3, 2}}));
    EXPECT_EQ(s.face_excess, 0);
}

TEST(Trace, FollowingRule)
{
    // (0,1) is followed by (1,w) with w after 0 in rotation(1) = (0 2), so w = 2.
    const auto fs = trace_faces(k3());
    const auto f = fs.face_of(Arc{0, 1});
    ASSERT_TRUE(f);
    const auto walk = fs.face(*f);
    const auto at = std::find(walk.begin(), walk.end(), Arc{0, 1});
    const auto next = (at + 1 == walk.end()) ? walk.front() : *(at + 1);
    EXPECT_EQ(next, (Arc{1, 2}));
}

TEST(Trace, K7Torus)
{
    const auto rs = k7_torus();
    const auto s  = summarize(rs);
    EXPECT_EQ(s.num_faces, 14u);
    EXPECT_TRUE(s.triangular());
    EXPECT_EQ(s.genus, 1u);
    // Both conventions agree on the oracle.
    const auto r = oracle::rotations_of(rs);
    EXPECT_EQ(oracle::faces(r, true).size(), 14u);
    EXPECT_EQ(oracle::faces(r, false).size(), 14u);
    EXPECT_EQ(oracle::genus(r), 1);
}

TEST(Trace, MatchesOracleOnRandomGraphs)
{
    std::mt19937 rng(20261016);
    for(int round = 0; round < 60; ++round)
    {
        const auto r  = oracle::random_rotations(rng, 4 + round % 9, 0.35);
        const auto rs = RotationSystem::from_rotations(r);
        const auto fs = trace_faces(rs);
        const auto expected = oracle::faces(r);
        ASSERT_EQ(fs.size(), expected.size());
        std::size_t total = 0;
        for(const auto& f : fs.faces()) {total += f.size();}
        EXPECT_EQ(total, 2 * rs.num_edges());
        const auto s = summarize(rs, fs);
        EXPECT_EQ(static_cast<long>(s.genus), oracle::genus(r));
        const auto oc = oracle::census(expected);
        EXPECT_EQ(s.face_census, (FaceCensus(oc.begin(), oc.end())));
        // V - E + F even and at most 2
        const long chi = static_cast<long>(s.num_vertices) - static_cast<long>(s.num_edges) + static_cast<long>(s.num_faces);
        EXPECT_LE(chi, 2);
        EXPECT_EQ(chi % 2, 0);
    }
}

TEST(Trace, MirrorKeepsCensus)
{
    std::mt19937 rng(7);
    for(int round = 0; round < 30; ++round)
    {
        const auto rs = RotationSystem::from_rotations(oracle::random_rotations(rng, 5 + round % 8, 0.4));
        EXPECT_EQ(summarize(rs).face_census, summarize(rs.mirror()).face_census);
        EXPECT_EQ(rs.mirror().mirror(), rs);
    }
}

TEST(Trace, FindFaceByCycle)
{
    const auto fs = trace_faces(k3());
    EXPECT_TRUE(fs.find_face({0, 1, 2}));
    EXPECT_TRUE(fs.find_face({1, 2, 0}));
    EXPECT_TRUE(fs.find_face({0, 2, 1}));
    EXPECT_FALSE(fs.find_face({0, 1}));
}

TEST(Delete, TriangleToPath)
{
    const auto rs = delete_edge(k3(), 0, 1);
    EXPECT_EQ(rs.num_edges(), 2u);
    const auto fs = trace_faces(rs);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs.length(0), 4u);
    EXPECT_EQ(summarize(rs, fs).genus, 0u);
}

TEST(Delete, MissingEdge)
{
    EXPECT_EQ(code_of([] {delete_edge(k3(), 0, 7);}), ErrorCode::NoSuchEdge);
    EXPECT_EQ(code_of([] {delete_edge(delete_edge(k3(), 0, 1), 0, 1);}), ErrorCode::NoSuchEdge);
}

TEST(Delete, TableRowLosesHandleEntries)
{
    // A single rotation row shaped like "... a 5 9 4 6 b ..." drops 9 then 4.
    const auto rs  = parse_rotation_system("0. 20 5 9 4 6 2\n20. 0\n5. 0\n9. 0\n4. 0\n6. 0\n2. 0\n");
    const auto cut = delete_edge(delete_edge(rs, 0, 9), 0, 4);
    const auto row = cut.rotation(0);
    EXPECT_EQ(std::vector<Vertex>(row.begin(), row.end()), (std::vector<Vertex>{20, 5, 6, 2}));
}

TEST(Insert, DeleteThenInsertIsIdentity)
{
    std::mt19937 rng(99);
    for(int round = 0; round < 40; ++round)
    {
        const auto rs = RotationSystem::from_rotations(oracle::random_rotations(rng, 5 + round % 7, 0.45));
        for(const Edge& e : rs.edges())
        {
            const EdgeAnchors a = anchors_of(rs, e.u, e.v);
            const auto cut      = delete_edge(rs, e.u, e.v);
            if(!cut.connected()) {continue;}
            EXPECT_EQ(insert_edge(cut, e.u, a.at_u, e.v, a.at_v), rs);
        }
    }
}

TEST(Insert, Errors)
{
    const auto path = delete_edge(k3(), 0, 1);
    EXPECT_EQ(code_of([&] {insert_edge(path, 0, Anchor::after(2), 2, Anchor::after(1));}), ErrorCode::EdgeExists);
    EXPECT_EQ(code_of([&] {insert_edge(path, 0, Anchor::after(1), 1, Anchor::after(2));}), ErrorCode::BadAnchor);
    EXPECT_EQ(code_of([&] {insert_edge(path, 0, Anchor::at(5), 1, Anchor::after(2));}), ErrorCode::BadAnchor);
    EXPECT_EQ(code_of([&] {insert_edge(path, 0, Anchor::after(2), 0, Anchor::after(2));}), ErrorCode::SelfLoop);
}

// Chord inside one face vs. edge across two faces, with Euler bookkeeping
// recomputed by the oracle.
TEST(Insert, WithinAndAcrossFaces)
{
    std::mt19937 rng(4242);
    int within = 0, across = 0;
    for(int round = 0; round < 400 && (within < 25 || across < 25); ++round)
    {
        const auto r  = oracle::random_rotations(rng, 6 + round % 7, 0.2);
        const auto rs = RotationSystem::from_rotations(r);
        const auto walks = oracle::faces(r);
        const long g0 = oracle::genus(r);
        const long f0 = static_cast<long>(walks.size());

        // corners: (face index, vertex, incoming neighbor)
        struct Corner {std::size_t face; Vertex at; Vertex after;};
        std::vector<Corner> corners;
        for(std::size_t f = 0; f < walks.size(); ++f)
        {
            const auto& w = walks[f];
            for(std::size_t i = 0; i < w.size(); ++i)
            {
                corners.push_back({f, w[(i + 1) % w.size()], w[i]});
            }
        }
        std::shuffle(corners.begin(), corners.end(), rng);
        bool did_within = false, did_across = false;
        for(std::size_t i = 0; i < corners.size(); ++i)
        {
            for(std::size_t j = i + 1; j < corners.size(); ++j)
            {
                const auto& a = corners[i];
                const auto& b = corners[j];
                if(a.at == b.at || rs.has_edge(a.at, b.at)) {continue;}
                const bool same = a.face == b.face;
                if((same && did_within) || (!same && did_across)) {continue;}
                const auto out = insert_edge(rs, a.at, Anchor::after(a.after), b.at, Anchor::after(b.after));
                const auto ro  = oracle::rotations_of(out);
                const long df  = static_cast<long>(oracle::faces(ro).size()) - f0;
                const long dg  = oracle::genus(ro) - g0;
                const auto s   = summarize(out);
                EXPECT_EQ(static_cast<long>(s.num_faces), f0 + df);
                if(same)
                {
                    EXPECT_EQ(df, 1);
                    EXPECT_EQ(dg, 0);
                    did_within = true;
                    ++within;
                }
                else
                {
                    EXPECT_EQ(df, -1);
                    EXPECT_EQ(dg, 1);
                    did_across = true;
                    ++across;
                }
            }
        }
    }
    EXPECT_GE(within, 20);
    EXPECT_GE(across, 20);
}

TEST(Reverse, OctahedronGainsA9Gon)
{
    const auto oct = octahedron();
    const auto before = summarize(oct);
    ASSERT_EQ(before.num_faces, 8u);
    ASSERT_EQ(before.genus, 0u);
    const auto fs = trace_faces(oct);
    ASSERT_TRUE(fs.find_face({0, 1, 2}) || fs.find_face({0, 2, 1}));
    const auto rev = reverse_triangle(oct, {0, 1, 2});
    const auto r   = oracle::rotations_of(rev);
    EXPECT_EQ(oracle::faces(r).size(), 6u);
    EXPECT_EQ(oracle::genus(r), 1);
    const auto s = summarize(rev);
    EXPECT_EQ(s.num_faces, 6u);
    EXPECT_EQ(s.genus, 1u);
    EXPECT_EQ(s.face_census, (FaceCensus{{3, 5}, {9, 1}}));
}

TEST(Reverse, EveryOctahedronFace)
{
    const auto oct = octahedron();
    const auto fs  = trace_faces(oct);
    for(std::size_t f = 0; f < fs.size(); ++f)
    {
        const auto v   = fs.vertices_of(f);
        const auto rev = reverse_triangle(oct, {v[0], v[1], v[2]});
        const auto s   = summarize(rev);
        EXPECT_EQ(s.num_faces, 6u);
        EXPECT_EQ(s.genus, 1u);
        EXPECT_EQ(reverse_triangle(rev, {v[0], v[1], v[2]}), oct);   // involution
    }
}

TEST(Reverse, NotAFace)
{
    // 0-1-2 is a triangle of K7 but the torus embedding need not have it as a face;
    // 1-2-4 is not even a triangle of the octahedron.
    EXPECT_EQ(code_of([] {reverse_triangle(octahedron(), {1, 2, 4});}), ErrorCode::NotAFace);
    const auto rs = k7_torus();
    const auto fs = trace_faces(rs);
    for(Vertex a = 0; a < 7; ++a)
    {
        for(Vertex b = a + 1; b < 7; ++b)
        {
            for(Vertex c = b + 1; c < 7; ++c)
            {
                if(fs.find_face({a, b, c}) || fs.find_face({a, c, b})) {continue;}
                EXPECT_EQ(code_of([&] {reverse_triangle(rs, {a, b, c});}), ErrorCode::NotAFace);
            }
        }
    }
}

TEST(Summary, VertexAndFaceExcess)
{
    const auto s = summarize(k7_torus());
    EXPECT_EQ(s.face_excess, 0);
    EXPECT_EQ(s.vertex_excess_for(6), 0);
    EXPECT_EQ(s.vertex_excess_for(4), 2);
}
