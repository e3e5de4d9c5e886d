#pragma once

// Conjugacy-class count k(U_n(F_q)) for the group of upper unitriangular
// matrices, by direct orbit enumeration under conjugation. Deliberately
// independent of the quiver/path-algebra machinery; used as the Burnside
// cross-check against the equioriented A_n count.

namespace radcount {

// Throws std::invalid_argument outside n in [1,5], q in {2,3}.
long long count_conjugacy_classes_un(int n, int q);

} // namespace radcount
