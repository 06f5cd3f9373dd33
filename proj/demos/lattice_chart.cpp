// Round trip through the companion-block chart: coordinates -> lattice ->
// canonical generators -> characteristic polynomial -> coordinates again.

#include <cstdio>

#include "qhowe/mv_lattice.hpp"

using namespace qhowe;

int main() {
    const std::vector<long> mu{2, 1};
    // free coordinates in row-major block order: p11 (2 coeffs), p12 (1),
    // p21 (1), p22 (1)
    const std::vector<Rat> coords{Rat(1), Rat(-2), Rat(1, 2), Rat(3), Rat(0)};
    const MVMatrix a = MVMatrix::from_free(mu, coords);
    std::printf("chart point A = %s\n\n", a.str().c_str());

    const Lattice L = mv_to_lattice(a);
    std::printf("canonical generators (columns):\n  %s\n", poly_matrix_str(L.gens()).c_str());
    std::printf("codim = %ld (pivot degrees), %ld (det degree)\n\n", L.codim(),
                L.codim_via_det());

    std::printf("ch(L)            = %s\n", L.ch().str().c_str());
    std::printf("charpoly(matrix) = %s\n\n", charpoly(a.matrix()).str().c_str());

    const MVMatrix back = lattice_to_mv(mu, L);
    std::printf("round trip recovers A: %s\n", back == a ? "yes" : "NO");

    const RatLattice dual = perp(L);
    std::printf("perp(L) = %s\n", dual.str().c_str());
    std::printf("perp(perp(L)) == L: %s\n", perp(dual) == embed(L) ? "yes" : "NO");
    return 0;
}
