#pragma once

#include <vector>

#include "z2vqe/lattice.hpp"
#include "z2vqe/pauli.hpp"
#include "z2vqe/state.hpp"

namespace z2vqe {

/// Couplings of the gauge-matter Hamiltonian: electric strength mu > 0,
/// hopping J >= 0 (J = 0 is the non-interacting limit), mass m >= 0 and
/// Gauss-penalty strength V >= 0.
struct ModelParams {
    double mu = 1.0;
    double J = 1.0;
    double m = 1.0;
    double V = 0.0;

    void validate() const;
};

/// G_l = base_sign * Z_site * prod X_links (base_sign the staggered sign).
struct GaussOp {
    Site site;
    PauliString string;
    double base_sign = 1.0;
};

struct HamiltonianBundle {
    PauliSum h_gauge;
    PauliSum h_matter;
    PauliSum h_penalty;
    PauliSum h_total;
    std::vector<GaussOp> gauss_ops;  // indexed like lattice.sites()
};

/// Electric term -mu * sum_links X plus the magnetic plaquette products
/// -sum_p ZZZZ.
PauliSum gauge_hamiltonian(const LadderLattice& lattice, double mu);

/// Spin form of the fermionic annihilation operator at the given site:
/// a string of (iZ) over all earlier matter qubits in fermion order times
/// (X + iY)/2 on the site's own qubit.
PauliSum jw_lower(const LadderLattice& lattice, Site site);

/// Hopping J * sum_links (phi^dag Z_link phi + h.c.) plus the staggered
/// mass m * sum_sites (-1)^(x+y) (1 - Z)/2, fully expanded to Pauli terms.
PauliSum matter_hamiltonian(const LadderLattice& lattice, double J, double m);

/// The two hermitian strings of one expanded hopping link (J = 1); these
/// are the kinetic generators of the gauge-invariant ansatz.
PauliSum kinetic_link_terms(const LadderLattice& lattice, int link_index);

GaussOp gauss_operator(const LadderLattice& lattice, Site site);

/// V * sum_sites (G_l - q_l)^dag (G_l - q_l) = sum_sites 2V (I - q_l G_l).
PauliSum penalty_hamiltonian(const LadderLattice& lattice, const StaticCharges& charges,
                             double V);

/// Assembles gauge + matter + penalty, simplifies, records the Gauss
/// operators and verifies term-by-term commutation with every G_l.
HamiltonianBundle total_hamiltonian(const LadderLattice& lattice, const ModelParams& params,
                                    const StaticCharges& charges);

/// Sector data for fidelity measurements and sector-restricted solves:
/// ops[l] with sign q_l * base_sign_l.
SectorSpec make_sector(const LadderLattice& lattice, const StaticCharges& charges);

}  // namespace z2vqe
