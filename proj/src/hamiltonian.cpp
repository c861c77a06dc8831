#include "z2vqe/hamiltonian.hpp"

#include <complex>
#include <stdexcept>

#include "z2vqe/errors.hpp"

namespace z2vqe {

namespace {
const std::complex<double> kI{0.0, 1.0};
}

void ModelParams::validate() const {
    require(mu > 0, "mu must be > 0");
    require(J >= 0, "J must be >= 0");
    require(m >= 0, "m must be >= 0");
    require(V >= 0, "V must be >= 0");
}

PauliSum gauge_hamiltonian(const LadderLattice& lattice, double mu) {
    require(mu > 0, "mu must be > 0");
    const int n = lattice.n_qubits();
    PauliSum h(n);
    for (int li = 0; li < lattice.n_links(); ++li)
        h.add(-mu, PauliString::single(n, lattice.qubit_of_link(li), 'X'));
    for (const Plaquette& p : lattice.plaquettes()) {
        PauliString zzzz = PauliString::identity(n);
        for (int li : p.link_index)
            zzzz = mul(zzzz, PauliString::single(n, lattice.qubit_of_link(li), 'Z'));
        h.add(-1.0, zzzz);
    }
    return simplify(h);
}

PauliSum jw_lower(const LadderLattice& lattice, Site site) {
    const int n = lattice.n_qubits();
    const int f = lattice.fermion_index(site);
    PauliString string = PauliString::identity(n);
    for (int k = 0; k < f; ++k) {
        string = mul(string, PauliString::single(n, lattice.qubit_of_site(lattice.sites()[k]), 'Z'));
        string.phase_k = static_cast<std::uint8_t>((string.phase_k + 1) & 3);  // factor i per Z
    }
    const int q = lattice.qubit_of_site(site);
    PauliSum out(n);
    out.add(0.5, mul(string, PauliString::single(n, q, 'X')));
    out.add(0.5 * kI, mul(string, PauliString::single(n, q, 'Y')));
    return out;
}

PauliSum kinetic_link_terms(const LadderLattice& lattice, int link_index) {
    const int n = lattice.n_qubits();
    const Link& link = lattice.links()[link_index];
    PauliSum z_link(n);
    z_link.add(1.0, PauliString::single(n, lattice.qubit_of_link(link_index), 'Z'));
    PauliSum hop = jw_lower(lattice, link.from).adjoint() * z_link * jw_lower(lattice, link.to());
    hop.add(hop.adjoint());
    return simplify(hop);
}

PauliSum matter_hamiltonian(const LadderLattice& lattice, double J, double m) {
    require(J >= 0 && m >= 0, "J and m must be >= 0");
    const int n = lattice.n_qubits();
    PauliSum h(n);
    if (J != 0) {
        for (int li = 0; li < lattice.n_links(); ++li) {
            PauliSum hop = kinetic_link_terms(lattice, li);
            hop.scale(J);
            h.add(hop);
        }
    }
    if (m != 0) {
        for (const Site& s : lattice.sites()) {
            const double c = 0.5 * m * lattice.staggered_sign(s);
            h.add(c, PauliString::identity(n));
            h.add(-c, PauliString::single(n, lattice.qubit_of_site(s), 'Z'));
        }
    }
    return simplify(h);
}

GaussOp gauss_operator(const LadderLattice& lattice, Site site) {
    const int n = lattice.n_qubits();
    PauliString g = PauliString::single(n, lattice.qubit_of_site(site), 'Z');
    for (int li : lattice.links_of_site(site))
        g = mul(g, PauliString::single(n, lattice.qubit_of_link(li), 'X'));
    return GaussOp{site, g, static_cast<double>(lattice.staggered_sign(site))};
}

PauliSum penalty_hamiltonian(const LadderLattice& lattice, const StaticCharges& charges,
                             double V) {
    require(V >= 0, "V must be >= 0");
    charges.validate(lattice);
    const int n = lattice.n_qubits();
    PauliSum h(n);
    for (const Site& s : lattice.sites()) {
        // (G - q)^dag (G - q) = 2 (I - q G) since G^2 = I and q^2 = 1
        GaussOp g = gauss_operator(lattice, s);
        h.add(2.0 * V, PauliString::identity(n));
        h.add(-2.0 * V * charges.q(s) * g.base_sign, g.string);
    }
    return simplify(h);
}

HamiltonianBundle total_hamiltonian(const LadderLattice& lattice, const ModelParams& params,
                                    const StaticCharges& charges) {
    params.validate();
    charges.validate(lattice);
    HamiltonianBundle b;
    b.h_gauge = gauge_hamiltonian(lattice, params.mu);
    b.h_matter = matter_hamiltonian(lattice, params.J, params.m);
    b.h_penalty = penalty_hamiltonian(lattice, charges, params.V);
    b.h_total = simplify(b.h_gauge + b.h_matter + b.h_penalty);
    for (const Site& s : lattice.sites()) b.gauss_ops.push_back(gauss_operator(lattice, s));

    for (const auto& term : b.h_total.terms())
        for (const auto& g : b.gauss_ops)
            if (!commutes(term.string, g.string))
                throw std::logic_error("Hamiltonian term " + term.string.ops_text() +
                                       " does not commute with the Gauss operator at (" +
                                       std::to_string(g.site.x) + "," + std::to_string(g.site.y) +
                                       ")");
    return b;
}

SectorSpec make_sector(const LadderLattice& lattice, const StaticCharges& charges) {
    charges.validate(lattice);
    SectorSpec sector;
    for (const Site& s : lattice.sites()) {
        GaussOp g = gauss_operator(lattice, s);
        sector.ops.push_back(g.string);
        sector.signs.push_back(charges.q(s) * g.base_sign);
    }
    return sector;
}

}  // namespace z2vqe
