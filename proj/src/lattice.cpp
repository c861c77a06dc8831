#include "z2vqe/lattice.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

#include "z2vqe/errors.hpp"

namespace z2vqe {

LadderLattice LadderLattice::build(int n_plaquettes) {
    require(n_plaquettes >= 1, "number of plaquettes must be >= 1");
    const int P = n_plaquettes;
    LadderLattice lat;
    lat.n_plaquettes_ = P;

    // Fermion order: (0,0), (0,1), (1,0), (1,1), ...
    for (int c = 0; c <= P; ++c) {
        lat.sites_.push_back({c, 0});
        lat.sites_.push_back({c, 1});
    }

    lat.qubit_of_site_.assign(lat.sites_.size(), -1);
    std::vector<int> rung(P + 1, -1), bottom(P, -1), top(P, -1);

    // Walk the fermion order; at each site assign the site qubit, then the
    // qubits of the not-yet-seen links leaving it (rung first, then +x).
    int next_qubit = 0;
    auto add_link = [&](Site from, LinkDir dir, std::vector<int>& slot, int col) {
        slot[col] = static_cast<int>(lat.links_.size());
        lat.links_.push_back({from, dir});
        lat.qubit_of_link_.push_back(next_qubit++);
    };
    for (int c = 0; c <= P; ++c) {
        lat.qubit_of_site_[2 * c] = next_qubit++;  // (c, 0)
        add_link({c, 0}, LinkDir::Y, rung, c);
        if (c < P) add_link({c, 0}, LinkDir::X, bottom, c);
        lat.qubit_of_site_[2 * c + 1] = next_qubit++;  // (c, 1)
        if (c < P) add_link({c, 1}, LinkDir::X, top, c);
    }

    for (int c = 0; c < P; ++c) {
        Plaquette p;
        p.base = {c, 0};
        p.link_index[0] = bottom[c];
        p.link_index[1] = rung[c];
        p.link_index[2] = rung[c + 1];
        p.link_index[3] = top[c];
        lat.plaquettes_.push_back(p);
    }
    return lat;
}

bool LadderLattice::contains(Site s) const {
    return s.x >= 0 && s.x <= n_plaquettes_ && (s.y == 0 || s.y == 1);
}

int LadderLattice::site_index(Site s) const {
    require(contains(s), "site (" + std::to_string(s.x) + "," + std::to_string(s.y) + ") is off the lattice");
    return 2 * s.x + s.y;
}

int LadderLattice::qubit_of_site(Site s) const { return qubit_of_site_[site_index(s)]; }

int LadderLattice::qubit_of_link(int link_index) const {
    require(link_index >= 0 && link_index < n_links(), "link index out of range");
    return qubit_of_link_[link_index];
}

int LadderLattice::staggered_sign(Site s) const {
    require(contains(s), "site off the lattice");
    return ((s.x + s.y) % 2 == 0) ? 1 : -1;
}

std::vector<int> LadderLattice::links_of_site(Site s) const {
    site_index(s);  // validates
    std::vector<int> out;
    for (int i = 0; i < n_links(); ++i) {
        const Link& l = links_[i];
        if (l.from == s || l.to() == s) out.push_back(i);
    }
    return out;
}

int LadderLattice::link_distance(Site a, Site b) const {
    int start = site_index(a);
    int goal = site_index(b);
    std::vector<int> dist(n_sites(), -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == goal) return dist[u];
        for (int li : links_of_site(sites_[u])) {
            const Link& l = links_[li];
            int v = site_index(l.from == sites_[u] ? l.to() : l.from);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist[goal];
}

std::string LadderLattice::layout_json() const {
    nlohmann::ordered_json out;
    std::vector<std::pair<int, nlohmann::ordered_json>> entries;
    for (int i = 0; i < n_sites(); ++i) {
        nlohmann::ordered_json e;
        e["kind"] = "site";
        e["coord"] = {sites_[i].x, sites_[i].y};
        entries.emplace_back(qubit_of_site_[i], e);
    }
    for (int i = 0; i < n_links(); ++i) {
        nlohmann::ordered_json e;
        e["kind"] = "link";
        e["coord"] = {links_[i].from.x, links_[i].from.y};
        e["direction"] = links_[i].dir == LinkDir::X ? "x" : "y";
        entries.emplace_back(qubit_of_link_[i], e);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [q, e] : entries) out[std::to_string(q)] = e;
    return out.dump(2);
}

bool StaticCharges::charged(Site s) const {
    return std::find(charged_sites.begin(), charged_sites.end(), s) != charged_sites.end();
}

void StaticCharges::validate(const LadderLattice& lattice) const {
    for (const Site& s : charged_sites)
        require(lattice.contains(s), "charge at (" + std::to_string(s.x) + "," +
                                         std::to_string(s.y) + ") is off the lattice");
    for (std::size_t i = 0; i < charged_sites.size(); ++i)
        for (std::size_t j = i + 1; j < charged_sites.size(); ++j)
            require(!(charged_sites[i] == charged_sites[j]), "duplicate charge site");
}

}  // namespace z2vqe
