#include <iostream>

#include "provlog/experiments.hpp"
#include "provlog/search.hpp"

int main()
{
    const auto& ids = provlog::suite_ids();
    int failed = 0;
    for ( std::size_t k = 0; k < ids.size(); ++k ) {
        auto r = provlog::run_suite( ids[ k ], provlog::default_threads() );
        std::cout << "criterion " << k + 1 << " [" << r.id << "] " << ( r.passed() ? "PASS" : "FAIL" ) << "  " << r.title << " ("
                  << r.seconds << " s)\n";
        for ( const auto& c : r.checks )
            std::cout << "    " << ( c.passed ? "ok     " : "FAILED " ) << c.name << ": " << c.detail << "\n";
        failed += !r.passed();
    }
    std::cout << ( ids.size() - failed ) << "/" << ids.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
