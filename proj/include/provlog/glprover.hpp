#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "provlog/formula.hpp"
#include "provlog/kripke.hpp"

namespace provlog {

struct Provable
{
    std::vector< std::string > trace;  // best-effort log of what was searched
};

struct Refuted
{
    Model model;
    std::size_t world = 0;
    std::string note;  // what the countermodel is, e.g. "point <3,0> of G_1"
    std::vector< std::string > trace;
};

using Verdict = std::variant< Provable, Refuted >;

[[nodiscard]] inline bool is_provable( const Verdict& v ) { return std::holds_alternative< Provable >( v ); }

struct DecideOptions
{
    bool cross_check = false;
    std::chrono::milliseconds timeout{ 10'000 };
    std::size_t max_worlds = 6;  // brute-force enumeration cap used by cross-checks
    unsigned threads = 1;
};

/// GL: valid on all finite irreflexive transitive frames. The main engine is
/// a sequent proof search with the Loeb rule that extracts a countermodel
/// from a failed search. Cross-check mode adds a type-elimination search and
/// brute-force enumeration up to max_worlds; any disagreement throws
/// std::logic_error.
[[nodiscard]] Verdict decide_gl( const Formula& f, const DecideOptions& opts = {} );

// The sequent search alone; nullopt when the sequent => f is derivable.
[[nodiscard]] std::optional< PointedModel > gl_sequent_search( const Formula& f, Budget& budget );

/// Type elimination over sets of true boxes. Exponential in the number of
/// distinct boxes; throws ResourceLimit above 12 of them.
[[nodiscard]] std::optional< PointedModel > gl_type_search( const Formula& f, Budget& budget );

/// GL.3: valid on every strict linear order of length <= |subformulas| + 1.
/// A refutation is the shortest falsifying chain.
[[nodiscard]] Verdict decide_gl3( const Formula& f, const DecideOptions& opts = {} );

/// Closed formulas of the fragment B, by evaluation at ranks 0..depth of the
/// linear frame. Throws FragmentError outside B.
[[nodiscard]] Verdict decide_gl_closed( const Formula& f, const DecideOptions& opts = {} );

enum class GL4Engine {
    ClassC,  // frames of class C with <= 1 + 2*(box count) worlds
    G1,      // points <m,i> of G_1 with m <= 1 + 2*(box count)
};

/// GL.4: valid on class C. Cross-check mode runs both engines plus
/// brute-force enumeration of class C up to max_worlds.
[[nodiscard]] Verdict decide_gl4( const Formula& f, const DecideOptions& opts = {} );
[[nodiscard]] Verdict decide_gl4( const Formula& f, GL4Engine engine, const DecideOptions& opts = {} );

} // namespace provlog
