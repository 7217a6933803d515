#include "pqtorsion/survey.hpp"

namespace pqtorsion {

namespace {

// Published low-genus table: genus, S_3/S_5/S_7 membership, #D(pq) and #K(pq).
// #K(pq) comes from the explicit isogeny of Gonzalez and Molina and is never
// computed here.
constexpr FixtureRow kTable1[] = {
    {2, 7, 1, false, true, true, 1, 2},
    {2, 17, 1, true, true, true, 3, 3},
    {3, 5, 1, true, true, true, 1, 1},
    {3, 7, 1, false, true, true, 1, 2},
    {3, 11, 1, true, true, true, 1, 1},
    {2, 13, 2, false, true, true, 7, 7},
    {2, 19, 2, false, true, true, 5, 5},
    {2, 29, 2, true, true, true, 5, 5},
    {2, 31, 3, false, true, true, 1, 8},
    {2, 41, 3, true, true, true, 7, 7},
    {2, 47, 3, true, true, true, 1, 4},
    {3, 13, 3, false, true, true, 7, 7},
    {3, 17, 3, true, true, true, 3, 3},
    {3, 19, 3, false, true, true, 5, 20},
    {3, 23, 3, true, true, true, 1, 8},
    {5, 7, 3, false, true, true, 1, 2},
    {5, 11, 3, true, true, true, 1, 1},
};

}  // namespace

std::span<const FixtureRow> table1_fixture() noexcept { return kTable1; }

}  // namespace pqtorsion
