#pragma once

// Lie models typed in from their structure equations, independent of the
// embedded registry.

#include "skewtor/liegeom.hpp"

namespace fixtures {

using skewtor::Form;
using skewtor::LieModel;
using skewtor::parseForm;

inline LieModel model(const char* name, int n, std::initializer_list<std::pair<int, const char*>> de) {
    std::vector<Form> d(n, Form(n));
    for (const auto& [i, expr] : de) d[i - 1] = parseForm(n, expr);
    return LieModel(name, d);
}

inline LieModel heis7() { return model("heis7", 7, {{4, "e16 + e37"}, {5, "e13 - e67"}}); }

inline LieModel solv7() {
    return model("solv7", 7, {{3, "e13 - e24"}, {4, "e23 + e14"}, {5, "-e15 + e26"}, {6, "-e25 - e16"}});
}

inline LieModel heis5() { return model("heis5", 5, {{5, "2*e12 + 2*e34"}}); }

// almost-abelian R x| R^6 with a torsion-compatible derivation
inline LieModel almab7() {
    return model("almab7", 7,
                 {{1, "e27 + e37 + e47"}, {2, "-e27 - e37"}, {3, "e27 + e57"}, {4, "-e17 - e27 - e47"},
                  {5, "-e57 + e67"}, {6, "-e47 - e57"}});
}

// almost-abelian whose Gamma has a nonzero Lambda^2_14 part
inline LieModel almab7Obstructed() { return model("almab7x", 7, {{2, "-e17 - e27"}, {3, "-e47"}}); }

// five- and four/six-dimensional models for the almost contact and almost
// hermitian checks
inline LieModel m5n() { return model("m5n", 5, {{4, "e12"}}); }
inline LieModel su2r2() { return model("su2r2", 5, {{1, "e23"}, {2, "-e13"}, {3, "e12"}}); }
inline LieModel aff5() { return model("aff5", 5, {{2, "e12"}, {4, "e34"}, {5, "2*e12 + 2*e34"}}); }
inline LieModel cosymp5() { return model("cosymp5", 5, {{2, "e12"}, {4, "e34"}}); }
inline LieModel nk5() { return model("nk5", 5, {{1, "e15"}}); }
inline LieModel nokill5() { return model("nokill5", 5, {{1, "e45"}, {2, "-e35"}}); }
inline LieModel kt4() { return model("kt4", 4, {{3, "e12"}}); }
inline LieModel herm4() { return model("herm4", 4, {{2, "e24"}}); }
inline LieModel solv6() {
    return model("solv6", 6, {{3, "e13 - e24"}, {4, "e23 + e14"}, {5, "-e15 + e26"}, {6, "-e25 - e16"}});
}

inline Form omega() { return parseForm(7, "e127 + e135 - e146 - e236 - e245 + e347 + e567"); }

inline Form heis7Torsion() { return parseForm(7, "e135 - e146 - e347 - e567"); }
inline Form solv7Torsion() { return parseForm(7, "-2*e234 + 2*e256"); }
inline Form heis5Torsion() { return parseForm(5, "2*e125 + 2*e345"); }

} // namespace fixtures
