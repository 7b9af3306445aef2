#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace provlog {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult
{
    std::string id;
    std::string title;
    std::vector< CheckResult > checks;
    double seconds = 0;

    [[nodiscard]] bool passed() const;
};

/// Suite ids, in acceptance order:
///   gl       sequent search vs brute force on random formulas
///   gl3      linearity, rank-defining formulas, GL refutes linearity
///   thm2.1   restricted substitution on linear models
///   thm4.5   root points, GLP schemata and linearity on Ignatiev truncations
///   thm5.4   FGL_1 normal forms and theoremhood, GL.4 axioms
///   prop6.5  G_1 embeddings of every small class C frame
///   gl4      GL.4 engines agree; branching schemata
///   thm7.12  the translation of the interpretability axioms
[[nodiscard]] const std::vector< std::string >& suite_ids();

// Throws std::invalid_argument for an unknown id. `threads` is used by the
// brute-force enumerations only; results do not depend on it.
[[nodiscard]] SuiteResult run_suite( std::string_view id, unsigned threads = 1 );

} // namespace provlog
