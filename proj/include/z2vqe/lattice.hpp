#pragma once

#include <string>
#include <utility>
#include <vector>

namespace z2vqe {

/// Matter-site coordinate: column in [0, P], leg in {0, 1}.
struct Site {
    int x = 0;
    int y = 0;
    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

enum class LinkDir { X, Y };

/// Gauge link, identified by its base site and direction (toward +x or +y).
struct Link {
    Site from;
    LinkDir dir = LinkDir::X;
    Site to() const { return dir == LinkDir::X ? Site{from.x + 1, from.y} : Site{from.x, from.y + 1}; }
    friend bool operator==(const Link&, const Link&) = default;
};

/// Elementary square: the four links around base site (c, 0).
struct Plaquette {
    Site base;
    // bottom x, left rung, right rung, top x
    int link_index[4] = {0, 0, 0, 0};
};

/// Two-leg ladder with P plaquettes: 2(P+1) matter sites, 3P+1 links,
/// N = 5P+3 qubits. Sites are stored in the fermionic (Jordan-Wigner)
/// ordering: column by column, lower leg first. Qubits are assigned along
/// the same traversal, each site followed by the links first encountered
/// there, so matter and link qubits alternate.
class LadderLattice {
public:
    static LadderLattice build(int n_plaquettes);

    int n_plaquettes() const { return n_plaquettes_; }
    int n_sites() const { return static_cast<int>(sites_.size()); }
    int n_links() const { return static_cast<int>(links_.size()); }
    int n_qubits() const { return n_sites() + n_links(); }

    const std::vector<Site>& sites() const { return sites_; }          // fermion order
    const std::vector<Link>& links() const { return links_; }
    const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }

    bool contains(Site s) const;
    // Index into sites(); doubles as the linear fermion index.
    int site_index(Site s) const;
    int fermion_index(Site s) const { return site_index(s); }

    int qubit_of_site(Site s) const;
    int qubit_of_link(int link_index) const;

    int staggered_sign(Site s) const;  // (-1)^(x+y)

    // Indices of all links incident on s; boundary links that would leave
    // the lattice simply do not exist.
    std::vector<int> links_of_site(Site s) const;

    // Graph distance counted in links.
    int link_distance(Site a, Site b) const;

    // JSON object mapping qubit index -> {kind, coord, direction}.
    std::string layout_json() const;

private:
    int n_plaquettes_ = 0;
    std::vector<Site> sites_;
    std::vector<Link> links_;
    std::vector<Plaquette> plaquettes_;
    std::vector<int> qubit_of_site_;
    std::vector<int> qubit_of_link_;
};

/// Static external charges: q = -1 on charged sites, +1 elsewhere.
struct StaticCharges {
    std::vector<Site> charged_sites;

    static StaticCharges none() { return {}; }
    bool charged(Site s) const;
    double q(Site s) const { return charged(s) ? -1.0 : 1.0; }
    void validate(const LadderLattice& lattice) const;
};

}  // namespace z2vqe
