#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "provlog/formula.hpp"
#include "provlog/glprover.hpp"

namespace provlog {

/// Truth of f at every point <m,i> of the model G_n* with m <= max_row:
/// result[m][i]. s_j holds at <m,i> iff bit j-1 of i is set; []B holds at
/// <m,i> iff B holds at every <p,j> with p < m. Requires f in F_n, n <= 8.
[[nodiscard]] std::vector< std::vector< char > > gn_truth_table( unsigned n, unsigned max_row, const Formula& f );

[[nodiscard]] bool eval_Gn( unsigned n, unsigned m, unsigned i, const Formula& f );

/// One conjunction of a normal form. []^a bot holds exactly at rows < a, so a
/// clause pins the column through constant literals and the row to an
/// interval through at most one positive and one negated []^a bot.
struct NormalClause
{
    std::vector< std::pair< unsigned, bool > > constants;  // (j, positive) for s_j / ~s_j
    unsigned at_least = 0;                                 // ~[]^at_least bot, omitted when 0
    std::optional< unsigned > below;                       // []^below bot, omitted when unbounded

    friend auto operator<=>( const NormalClause&, const NormalClause& ) = default;
};

/// A Boolean combination of s_1..s_n and []^a bot (a <= omega, []^omega bot
/// = top) in canonical disjunctive form: clauses sorted and distinct.
struct NormalForm
{
    unsigned n = 0;
    std::vector< NormalClause > clauses;
    std::vector< std::string > steps;  // []B ~> []^a bot rewrites, innermost first

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] Formula to_formula() const;
};

// "[]^3 bot", and "[]^omega bot" for the unbounded case.
[[nodiscard]] std::string box_bot_text( std::optional< unsigned > alpha );

/// Normal form of f in F_n, read off the G_n* truth table of rows
/// 0..depth(f), where every row from depth(f) on behaves alike. The result
/// is certified against f on rows 0..depth(f)+1; a mismatch throws
/// std::logic_error.
[[nodiscard]] NormalForm normal_form( unsigned n, const Formula& f );

/// FGL_n: Provable iff f holds at every <m,i> with m <= depth(f). A
/// refutation is the subframe generated by the least failing point.
[[nodiscard]] Verdict decide_fgl( unsigned n, const Formula& f );

} // namespace provlog
