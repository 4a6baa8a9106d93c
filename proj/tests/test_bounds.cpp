#include "dsep/bounds.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace dsep;
using bounds::Int;

namespace
{

// Exact rational p/q, reduced, q > 0; ceiling by stepping from truncation.
struct Q
{
    Int p, q;
    Q(Int num, Int den) : p(num), q(den)
    {
        if(q < 0) {p = -p; q = -q;}
        const Int g = std::gcd(p < 0 ? -p : p, q);
        if(g > 1) {p /= g; q /= g;}
    }
    friend Q operator+(Q a, Q b) {return Q(a.p * b.q + b.p * a.q, a.q * b.q);}
    Int ceil() const
    {
        Int k = p / q;
        while(k * q < p) {++k;}
        while((k - 1) * q >= p) {--k;}
        return k;
    }
    Int floor() const {return ceil() - (p % q != 0 ? 1 : 0);}
};

Int oracle_gamma(Int n) {return Q((n - 3) * (n - 4), 12).ceil();}

Int oracle_lemma2(Int c, Int v, Int f) {return (Q((c - 2) * (c - 3), 12) + Q((c - 6) * v, 12) + Q(f, 6)).ceil();}

ErrorCode code_of(auto&& f)
{
    try {f();}
    catch(const Error& e) {return e.code();}
    return ErrorCode::Io;
}

} // namespace

TEST(Gamma, SmallValues)
{
    EXPECT_EQ(bounds::genus_complete(3), 0);
    EXPECT_EQ(bounds::genus_complete(4), 0);
    EXPECT_EQ(bounds::genus_complete(7), 1);
    EXPECT_EQ(bounds::genus_complete(8), 2);
    EXPECT_EQ(bounds::genus_complete(11), 5);
    EXPECT_EQ(bounds::genus_complete(17), 16);
    EXPECT_EQ(code_of([] {bounds::genus_complete(2);}), ErrorCode::NTooSmall);
}

TEST(Gamma, MatchesRationalOracle)
{
    for(Int n = 3; n <= 2000; ++n) {ASSERT_EQ(bounds::genus_complete(n), oracle_gamma(n)) << n;}
}

TEST(LowerBound, ZeroExcessIsGammaOfKcPlus1)
{
    for(Int c = 6; c <= 200; ++c) {ASSERT_EQ(bounds::lemma2_bound({c, 0, 0}), bounds::genus_complete(c + 1)) << c;}
}

TEST(LowerBound, Examples)
{
    EXPECT_EQ(bounds::lemma2_bound({8, 0, 12}), 5);
    EXPECT_EQ(bounds::lemma2_bound({8, 0, 12}), bounds::genus_complete(9) + 2);
    for(Int s = 1; s <= 40; ++s)
    {
        const Int c = 12 * s + 4;
        EXPECT_EQ(bounds::lemma2_bound({c, 0, 17}), bounds::genus_complete(c + 1) + 2) << s;
    }
    EXPECT_EQ(code_of([] {bounds::lemma2_bound({5, 0, 0});}), ErrorCode::CTooSmall);
}

TEST(LowerBound, AgreesWithOracleAndIsMonotone)
{
    for(Int c = 6; c <= 60; ++c)
    {
        for(Int v = 0; v <= 6; ++v)
        {
            for(Int f = 0; f <= 30; ++f)
            {
                const Int b = bounds::lemma2_bound({c, v, f});
                ASSERT_EQ(b, oracle_lemma2(c, v, f));
                EXPECT_GE(b, bounds::lemma2_bound({c, v, f > 0 ? f - 1 : 0}));
                EXPECT_GE(b, bounds::lemma2_bound({c, v > 0 ? v - 1 : 0, f}));
                const Int weak = oracle_gamma(c + 1) + (Q((c - 6) * v, 12) + Q(f, 6)).floor();
                EXPECT_EQ(bounds::lemma2_weak_bound({c, v, f}), weak);
                EXPECT_GE(b, weak);
            }
        }
    }
}

TEST(Delta, LowerBounds)
{
    for(Int c = 8; c <= 200; ++c)
    {
        ASSERT_EQ(bounds::delta1_lower(c), oracle_gamma(c + 1) + 2);
        ASSERT_EQ(bounds::delta2_lower(c), oracle_gamma(c + 1) + 1);
    }
    EXPECT_EQ(bounds::delta1_lower(16), 18);
    EXPECT_EQ(bounds::delta1_lower(8), 5);
    EXPECT_EQ(bounds::delta2_lower(10), 6);
    EXPECT_EQ(code_of([] {bounds::delta1_lower(7);}), ErrorCode::CTooSmall);
}

TEST(CutfaceLength, AtLeastFifteen)
{
    EXPECT_EQ(bounds::min_cutface_length(8), 15);
    EXPECT_EQ(bounds::min_cutface_length(100), 15);
    EXPECT_EQ(code_of([] {bounds::min_cutface_length(7);}), ErrorCode::CTooSmall);
}

// An 18-gon has face excess 15; it can be optimal exactly when the bound with
// f+ = 15 still evaluates to gamma(K_{c+1}) + 2.
TEST(Residues, EighteenGonFeasibility)
{
    static_assert(bounds::feasible_18gon_residues(16));
    static_assert(!bounds::feasible_18gon_residues(11));
    static_assert(bounds::feasible_18gon_residues(12));
    for(Int c = 8; c <= 500; ++c)
    {
        const bool by_bound = oracle_lemma2(c, 0, 15) == oracle_gamma(c + 1) + 2;
        const Int r = c % 12;
        const bool listed = r == 0 || r == 1 || r == 4 || r == 5 || r == 8 || r == 9;
        ASSERT_EQ(bounds::feasible_18gon_residues(c), listed) << c;
        ASSERT_EQ(bounds::feasible_18gon_residues(c), by_bound) << c;
    }
}
