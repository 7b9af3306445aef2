#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "provlog/kripke.hpp"

namespace provlog {

struct PMorphism
{
    Frame source;
    Frame target;
    std::vector< std::size_t > map;  // source world index -> target world index
};

struct PMorphismCheck
{
    bool ok = false;
    // The source/target world pair at which forth or back fails.
    std::optional< std::pair< std::size_t, std::size_t > > witness;
    std::string reason;

    explicit operator bool() const { return ok; }
};

// Forth: x R y implies f(x) R' f(y). Back: f(x) R' y' implies x R y with f(y) = y'.
[[nodiscard]] PMorphismCheck verify_pmorphism( const PMorphism& pm );

/// The subframe of G_n generated by <m,i>: the point itself and every <p,j>
/// with p < m, j < 2^n. World 0 is <m,i>; names are "<p,j>".
[[nodiscard]] Frame gn_generated_frame( unsigned n, unsigned m, unsigned i );

struct G1Embedding
{
    unsigned row = 0;
    unsigned column = 0;
    PMorphism morphism;  // from gn_generated_frame(1, row, column) onto the generated subframe
};

/// A point <m,i> of G_1 and a verified p-morphism from the subframe it
/// generates onto the subframe of `target` generated by x. Throws
/// PreconditionError when that subframe is not in class C, and
/// std::logic_error if the construction fails verification.
[[nodiscard]] G1Embedding build_pmorphism_from_G1( const Frame& target, std::size_t x );

// V(p) := f^-1 V'(p) on the source frame.
[[nodiscard]] Model pull_back( const PMorphism& pm, const Model& target_model );

} // namespace provlog
