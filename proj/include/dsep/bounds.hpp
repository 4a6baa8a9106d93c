#ifndef DSEP_BOUNDS_HPP
#define DSEP_BOUNDS_HPP

#include "error.hpp"

#include <cstdint>
#include <string>

// Closed-form genus bounds. Every quantity is a fraction with denominator 12,
// so the arithmetic is done on integer numerators and never touches floating
// point.

namespace dsep::bounds
{

using Int = std::int64_t;

struct BoundQuery
{
    Int c      = 0;   // connectivity (minimum degree)
    Int v_plus = 0;   // vertex excess
    Int f_plus = 0;   // face excess
};

namespace detail
{

constexpr Int floor_div(Int num, Int den) noexcept
{
    Int q = num / den;
    if((num % den != 0) && ((num < 0) != (den < 0))) {--q;}
    return q;
}

constexpr Int ceil_div(Int num, Int den) noexcept
{
    return -floor_div(-num, den);
}

} // detail

/// Minimum genus of K_n, ceil((n-3)(n-4)/12).
inline Int genus_complete(Int n)
{
    ensure(n >= 3, ErrorCode::NTooSmall, "n = " + std::to_string(n) + " < 3");
    return detail::ceil_div((n - 3) * (n - 4), 12);
}

/// Twelve times the rational quantity (c-2)(c-3)/12 + (c-6)v+/12 + f+/6.
inline Int lemma2_numerator(const BoundQuery& q)
{
    return (q.c - 2) * (q.c - 3) + (q.c - 6) * q.v_plus + 2 * q.f_plus;
}

/// Genus lower bound for an embedding of minimum degree c >= 6 with the given
/// vertex and face excess.
inline Int lemma2_bound(const BoundQuery& q)
{
    ensure(q.c >= 6, ErrorCode::CTooSmall, "c = " + std::to_string(q.c) + " < 6");
    ensure(q.v_plus >= 0 && q.f_plus >= 0, ErrorCode::CTooSmall, "excess must be non-negative");
    return detail::ceil_div(lemma2_numerator(q), 12);
}

/// gamma(K_{c+1}) + floor((c-6)v+/12 + f+/6), never larger than lemma2_bound.
inline Int lemma2_weak_bound(const BoundQuery& q)
{
    ensure(q.c >= 6, ErrorCode::CTooSmall, "c = " + std::to_string(q.c) + " < 6");
    return genus_complete(q.c + 1) + detail::floor_div((q.c - 6) * q.v_plus + 2 * q.f_plus, 12);
}

/// Lower bound on delta_1(c): dual-separable embeddings of c-connected graphs.
inline Int delta1_lower(Int c)
{
    ensure(c >= 8, ErrorCode::CTooSmall, "c = " + std::to_string(c) + " < 8");
    return genus_complete(c + 1) + 2;
}

/// Lower bound on delta_2(c). Informational; a matching construction is known.
inline Int delta2_lower(Int c)
{
    ensure(c >= 8, ErrorCode::CTooSmall, "c = " + std::to_string(c) + " < 8");
    return genus_complete(c + 1) + 1;
}

/// Shortest possible cutface in a dual-separable embedding of connectivity c >= 8.
inline Int min_cutface_length(Int c)
{
    ensure(c >= 8, ErrorCode::CTooSmall, "c = " + std::to_string(c) + " < 8");
    return 15;
}

/// Residues of c for which an 18-gon cutface (f+ = 15) can still meet the
/// delta_1 lower bound.
constexpr bool feasible_18gon_residues(Int c) noexcept
{
    switch(((c % 12) + 12) % 12)
    {
        case 0: case 1: case 4: case 5: case 8: case 9: return true;
        default: return false;
    }
}

} // dsep::bounds
#endif // DSEP_BOUNDS_HPP
