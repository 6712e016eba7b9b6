// gtest printers so failing assertions show readable values.
#ifndef SKYLINE_TESTS_PRINTERS_HPP_
#define SKYLINE_TESTS_PRINTERS_HPP_

#include <ostream>

#include "skyline/correspondences.hpp"
#include "skyline/permutations.hpp"
#include "skyline/polynomials.hpp"
#include "skyline/shapes.hpp"
#include "skyline/skyline.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

inline void PrintTo(const WeakComposition& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const ReducedWord& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const Tableau& t, std::ostream* os) { *os << t.to_string(); }
inline void PrintTo(const Ssaf& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const Biword& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace skyline

#endif  // SKYLINE_TESTS_PRINTERS_HPP_
